"""Command-line entry points: `confsite build` and `confsite project`."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click
import numpy as np

from . import chat, embedding, images, ingest, projection, render
from .projection import Layout, TsneParams

log = logging.getLogger(__name__)

WORDVECS_FILE = "wordvecs.txt"


def _compute_embeddings(bundle, input_dir: Path):
    vec_path = input_dir / WORDVECS_FILE
    if vec_path.exists():
        table = embedding.load_word_vectors(vec_path)
        return embedding.embed_corpus(bundle, table)
    log.warning("%s not found; all papers get zero embeddings "
                "(the map will carry no semantic structure)", WORDVECS_FILE)
    return [embedding.DocumentEmbedding(p.uid, np.zeros(2), 0.0)
            for p in bundle.papers]


def _load_existing_layout(out: Path, bundle) -> Layout:
    path = out / "data" / "layout.json"
    if not path.exists():
        raise click.ClickException(
            f"--skip-projection given but {path} does not exist")
    entries = json.loads(path.read_text(encoding="utf-8"))
    by_uid = {e["uid"]: (e["x"], e["y"]) for e in entries}
    missing = [p.uid for p in bundle.papers if p.uid not in by_uid]
    if missing:
        raise click.ClickException(
            f"existing layout.json is missing papers: {', '.join(missing)}")
    y = np.array([by_uid[p.uid] for p in bundle.papers], dtype=np.float64)
    return Layout(n=len(bundle.papers), y=y, final_kl=0.0, seed=0)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Enable debug logging.")
def main(verbose: bool) -> None:
    """Static-site generator for virtual academic conferences."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.option("--in", "input_dir", required=True,
              type=click.Path(exists=True, file_okay=False, path_type=Path),
              help="Directory with conference.yml, papers.csv, events.csv.")
@click.option("--out", "outdir", required=True,
              type=click.Path(file_okay=False, path_type=Path),
              help="Output directory for the generated site.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--perplexity", default=30.0, show_default=True, type=float)
@click.option("--skip-projection", is_flag=True,
              help="Reuse <out>/data/layout.json instead of running t-SNE.")
@click.option("--provision-chat", is_flag=True,
              help="Create chat channels on the configured server (needs CHAT_TOKEN).")
def build(input_dir: Path, outdir: Path, seed: int, perplexity: float,
          skip_projection: bool, provision_chat: bool) -> None:
    """Run the full pipeline: ingest, images, embed, project, render."""
    try:
        bundle = ingest.load_conference(input_dir)
    except ingest.IngestError as exc:
        raise click.ClickException(str(exc)) from exc

    bundle = images.attach_images(bundle, input_dir)

    if skip_projection:
        layout = _load_existing_layout(outdir, bundle)
    elif not bundle.papers:
        layout = Layout(n=0, y=np.zeros((0, 2)), final_kl=0.0, seed=seed)
    else:
        embeddings = _compute_embeddings(bundle, input_dir)
        params = TsneParams(perplexity=perplexity, seed=seed)
        layout = projection.project_corpus(embeddings, params)

    if provision_chat:
        if not bundle.config.chat_server_url:
            raise click.ClickException(
                "--provision-chat requires chat_server_url in conference.yml")
        client = chat.ChatServerClient.from_env(bundle.config.chat_server_url)
        report = chat.provision_channels(bundle.papers, client)
        click.echo(f"chat provisioning: {report.summary()}")
        if report.failed:
            for name, message in report.failed:
                click.echo(f"  failed {name}: {message}", err=True)

    manifest = render.render_site(bundle, layout, outdir, input_dir=input_dir)
    click.echo(f"wrote {len(manifest.entries)} files to {outdir}")


@main.command()
@click.option("--in", "input_dir", required=True,
              type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--out", "outdir", required=True,
              type=click.Path(file_okay=False, path_type=Path))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--perplexity", default=30.0, show_default=True, type=float)
def project(input_dir: Path, outdir: Path, seed: int, perplexity: float) -> None:
    """Embed abstracts and write data/layout.json without rendering pages."""
    try:
        bundle = ingest.load_conference(input_dir)
    except ingest.IngestError as exc:
        raise click.ClickException(str(exc)) from exc
    if not bundle.papers:
        raise click.ClickException("no papers to project")
    embeddings = _compute_embeddings(bundle, input_dir)
    params = TsneParams(perplexity=perplexity, seed=seed)
    layout = projection.project_corpus(embeddings, params)
    data_dir = outdir / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    entries = render.scale_layout(layout, [p.uid for p in bundle.papers])
    (data_dir / "layout.json").write_text(
        json.dumps(entries, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    click.echo(f"projected {layout.n} papers (final KL {layout.final_kl:.4f}) "
               f"-> {data_dir / 'layout.json'}")


if __name__ == "__main__":
    main()
