# Command-line framework used to build the grasskt tool
import click

# Python logging for monitoring and debugging
import logging

# Standard streams; the report goes to stdout, logs and progress to stderr
import sys

# Command groups, registered the way blueprints are
from grasskt.commands.algebra_commands import cohomology, gb, snf
from grasskt.commands.kgroups_commands import hopf_order, kgroups
from grasskt.commands.verify_commands import verify

# Error hierarchy with exit codes
from grasskt.services.errors import GrassKTError

# Pre-configured logger instance and settings from config
from config import config, logger


class GrassKTGroup(click.Group):
    """Click group with one global error handler for every subcommand."""

    # Malformed invocations are invalid input, not failed verifications
    USAGE_EXIT_CODE = 3

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = self.USAGE_EXIT_CODE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = self.USAGE_EXIT_CODE
            raise
        except (click.exceptions.Exit, click.exceptions.Abort, click.ClickException):
            raise
        except GrassKTError as e:
            logger.error(f"{type(e).__name__}: {e}")
            ctx.exit(e.exit_code)
        except Exception as e:
            logger.error(f"Unhandled Exception: {e}", exc_info=True)
            ctx.exit(1)


def configure_logging(level: str, log_file: str = None):
    """
    Configures the root logger once per invocation.

    Steps:
    - Always log to stderr so stdout carries only the report.
    - Add a file handler when a log file is given.
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        handlers=handlers,
        force=True,
    )
    # Service loggers pin INFO; the chosen level applies to them too
    for name in list(logging.root.manager.loggerDict):
        if name.startswith("grasskt"):
            logging.getLogger(name).setLevel(logging.root.level)


def create_cli() -> click.Group:
    """
    Factory for the grasskt command-line interface.

    Steps:
    - Build the top-level group with logging options.
    - Register the command modules.
    - Route every failure through the global error handler.

    Returns:
        click.Group ready to be called.
    """

    @click.group(cls=GrassKTGroup)
    @click.version_option(config.TOOL_VERSION, prog_name="grasskt")
    @click.option("--log-level", default=config.LOG_LEVEL, show_default=True,
                  type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
    @click.option("--log-file", default=config.LOG_FILE, type=click.Path(dir_okay=False),
                  help="Also write logs to this file.")
    def cli(log_level, log_file):
        """Exact K-theory computations for real Grassmannians."""
        configure_logging(log_level, log_file)

    cli.add_command(kgroups)
    cli.add_command(hopf_order)
    cli.add_command(verify)
    cli.add_command(cohomology)
    cli.add_command(gb)
    cli.add_command(snf)
    return cli
