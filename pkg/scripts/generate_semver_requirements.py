#!/usr/bin/env python3
"""Generate requirements.txt from the dependencies declared in pyproject.toml."""

import sys
import tomllib
from pathlib import Path

import click

HEADER = '# Generated from pyproject.toml by scripts/generate_semver_requirements.py\n\n'


def render_requirements(pyproject: dict) -> str:
  """requirements.txt text for a parsed pyproject mapping."""
  dependencies = pyproject.get('project', {}).get('dependencies', [])
  return HEADER + ''.join(f'{dep}\n' for dep in dependencies)


@click.command()
@click.option('--pyproject', default='pyproject.toml', help='Manifest to read')
@click.option('--output', default='requirements.txt', help='File to write')
def main(pyproject: str, output: str):
  """Extract dependencies from pyproject.toml and write requirements.txt."""
  pyproject_path = Path(pyproject)
  if not pyproject_path.exists():
    click.echo(f'Error: {pyproject} not found', err=True)
    sys.exit(1)
  with open(pyproject_path, 'rb') as f:
    data = tomllib.load(f)
  text = render_requirements(data)
  if text == HEADER:
    click.echo('Warning: no dependencies found in pyproject.toml', err=True)
  Path(output).write_text(text)
  click.echo(f'Generated {output} with {text.count(chr(10)) - 2} dependencies')


if __name__ == '__main__':
  main()
