# Command line for kmajority
# Add new command groups here

import sys

import click

from kmajority.config import get_settings
from kmajority.errors import KMajorityError
from kmajority.log import configure_logging

from .experiment import experiment
from .find import find
from .generate import generate
from .verify import verify

USAGE_EXIT = 1


class KMajorityGroup(click.Group):
  """Root group mapping failures to the exit codes 1 (usage), 2 (verification), 3 (resources)."""

  def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
    try:
      rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
      code = rv if isinstance(rv, int) else 0
    except click.ClickException as e:
      e.show()
      code = USAGE_EXIT
    except click.Abort:
      click.echo('Aborted!', err=True)
      code = USAGE_EXIT
    except KMajorityError as e:
      click.echo(f'error: {e}', err=True)
      code = e.exit_code
    if standalone_mode:
      sys.exit(code)
    return code


@click.group(cls=KMajorityGroup)
@click.option('--verbose', is_flag=True, default=False, help='Debug logging and tables on stderr')
@click.pass_context
def cli(ctx: click.Context, verbose: bool):
  """Constructions, oracles and experiments for k-majority tournaments."""
  configure_logging(verbose)
  get_settings()
  ctx.ensure_object(dict)
  ctx.obj['verbose'] = verbose


cli.add_command(generate)
cli.add_command(find)
cli.add_command(verify)
cli.add_command(experiment)


def main() -> None:
  """Console script entry point."""
  cli()
