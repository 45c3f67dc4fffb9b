import sys

import click

from api_cli import cli
from utils import exceptions, logging


log = logging.getLogger()


def main(args: list[str] | None = None) -> None:
    """Run the CLI; any failure ends the process with a one-line `error[<category>]: <message>` on stderr."""
    with log.as_exit_status():
        try:
            # a COPY of sys.argv, the worker processes of the pools re-read it untouched:
            cli.main(args=list(sys.argv[1:] if args is None else args), prog_name="assin", standalone_mode=False)
        except click.exceptions.Abort:
            raise exceptions.ConfigError("aborted") from None
        except click.ClickException as err:
            raise exceptions.ConfigError(err.format_message()) from None


if __name__ == "__main__":
    main()
