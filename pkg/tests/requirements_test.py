import tomllib
from pathlib import Path

from scripts.generate_semver_requirements import HEADER, render_requirements

ROOT = Path(__file__).resolve().parents[1]


def test_render_requirements():
  text = render_requirements({'project': {'dependencies': ['click>=8.2.0', 'numpy>=1.26.0']}})
  assert text == HEADER + 'click>=8.2.0\nnumpy>=1.26.0\n'
  assert render_requirements({}) == HEADER


def test_requirements_file_is_current():
  with open(ROOT / 'pyproject.toml', 'rb') as f:
    pyproject = tomllib.load(f)
  assert (ROOT / 'requirements.txt').read_text() == render_requirements(pyproject)
