"""generate: write profiles and tournaments in the core file formats."""

import click

from kmajority.cli.common import (
  input_option,
  load_profile,
  output_option,
  read_input,
  seed_option,
  write_profile_output,
  write_tournament_output,
)
from kmajority.constructions import lift_profile, paley7, paley7_profile, power, random_tournament
from kmajority.formats import parse_tournament, tournament_style
from kmajority.random_sim import sample_profile

style_option = click.option(
  '--style',
  type=click.Choice(['matrix', 'list']),
  default='matrix',
  show_default=True,
  help='Tournament row style',
)


@click.group()
def generate():
  """Construct profiles and tournaments."""


@generate.command('random-profile')
@click.option('--n', type=click.IntRange(min=1), required=True)
@click.option('--k', type=click.IntRange(min=1), required=True)
@seed_option
@output_option
def random_profile(n: int, k: int, seed: int, output: str | None):
  """2k-1 uniform orders on n vertices."""
  write_profile_output(sample_profile(n, k, seed), output)


@generate.command('paley7')
@click.option(
  '--profile', is_flag=True, default=False, help='Write the 2-majority realizer instead'
)
@style_option
@output_option
def paley7_cmd(profile: bool, style: str, output: str | None):
  """The Paley tournament on seven vertices."""
  if profile:
    write_profile_output(paley7_profile(), output)
  else:
    write_tournament_output(paley7(), style, output)


@generate.command('power')
@input_option
@click.option('--r', type=click.IntRange(min=1), required=True)
@output_option
def power_cmd(input_path: str, r: int, output: str | None):
  """G^r of a tournament file, written in the input's row style."""
  text, _ = read_input(input_path)
  write_tournament_output(power(parse_tournament(text), r), tournament_style(text), output)


@generate.command('lift')
@input_option
@click.option('--r', type=click.IntRange(min=1), required=True)
@output_option
def lift(input_path: str, r: int, output: str | None):
  """Profile generating the r-th power of a profile's tournament."""
  profile, _ = load_profile(input_path)
  write_profile_output(lift_profile(profile, r), output)


@generate.command('random-tournament')
@click.option('--n', type=click.IntRange(min=1), required=True)
@seed_option
@style_option
@output_option
def random_tournament_cmd(n: int, seed: int, style: str, output: str | None):
  """Every pair oriented by a fair coin."""
  write_tournament_output(random_tournament(n, seed), style, output)
