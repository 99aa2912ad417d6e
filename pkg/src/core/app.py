import argparse
import logging
from typing import Optional, Sequence

from src.core.config import Config
from src.handlers import command_handlers
from src.models.channel import ChannelKind
from src.utils.decorators import EXIT_USAGE

logger = logging.getLogger(__name__)


class HolevoApp:
    def __init__(self, config: Config):
        self.config = config
        self.parser = None
        self.handlers = {}

    def start(self):
        self.parser = self._build_parser()
        self._setup_handlers()
        logger.debug("CLI initialized")

    def _setup_handlers(self):
        self.handlers["measures"] = command_handlers.measures_command
        self.handlers["equivalence"] = command_handlers.equivalence_command
        self.handlers["sweep-werner"] = command_handlers.sweep_werner_command
        self.handlers["gad-surface"] = command_handlers.gad_surface_command
        self.handlers["verify"] = command_handlers.verify_command

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="holevo-weak",
            description="Holevo quantities, classical correlation and discord of "
                        "Bell-diagonal states under projective and weak measurements",
        )
        sub = parser.add_subparsers(dest="command", required=True)

        measures = sub.add_parser("measures", help="full measure report as JSON")
        source = measures.add_mutually_exclusive_group(required=True)
        source.add_argument("--c", help="correlation triple c1,c2,c3")
        source.add_argument("--werner-z", type=float, help="Werner state singlet weight z")
        source.add_argument("--werner-alpha", type=float, help="Werner state alpha")
        measures.add_argument("--x", type=float, help="weak measurement strength")
        self._add_channel_arguments(measures)
        measures.add_argument("--allow-unphysical", action="store_true",
                              help="evaluate closed forms for triples outside the Bell tetrahedron")
        measures.add_argument("--out", help="write output here instead of stdout")

        equivalence = sub.add_parser("equivalence", help="depolarize-then-project vs weak measurement")
        equivalence.add_argument("--c", required=True, help="correlation triple c1,c2,c3")
        equivalence.add_argument("--direction", default="0,0,1", help="measurement direction z1,z2,z3")
        equivalence.add_argument("--p", type=float, help="depolarizing probability in (0, 3/4)")
        equivalence.add_argument("--side", choices=("A", "B"), default="A")
        equivalence.add_argument("--out")

        werner = sub.add_parser("sweep-werner", help="Werner-state measures over z as CSV")
        werner.add_argument("--x", dest="x_list", type=float, action="append",
                            help="weak strength; repeat for several (default 0.25 and 2.5)")
        werner.add_argument("--z-grid", help="START:STOP:COUNT (default 0:1:101)")
        werner.add_argument("--out")

        gad = sub.add_parser("gad-surface", help="GAD dynamics of Werner states as CSV")
        gad.add_argument("--x", dest="x_list", type=float, action="append",
                         help="weak strength; repeat for several (default 0.5 and 1)")
        gad.add_argument("--z-grid", help="START:STOP:COUNT (default 0:1:51)")
        gad.add_argument("--gamma-grid", help="START:STOP:COUNT inside (0, 1) (default 0.01:0.99:51)")
        gad.add_argument("--out")

        verify = sub.add_parser("verify", help="run the closed-form verification suites")
        verify.add_argument("--seed", type=int)
        verify.add_argument("--samples", type=int)
        verify.add_argument("--grid-points", type=int)
        verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
        verify.add_argument("--out")
        return parser

    @staticmethod
    def _add_channel_arguments(parser):
        parser.add_argument("--channel", choices=[k.value for k in ChannelKind])
        parser.add_argument("--p", type=float, help="channel probability")
        parser.add_argument("--gamma", type=float, help="GAD damping strength")
        parser.add_argument("--side", choices=("A", "B"), default="A", help="qubit hit by depol1")

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        if self.parser is None:
            self.start()
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            # argparse exits with 2 on bad flags and 0 on --help
            return EXIT_USAGE if e.code else 0
        logger.info(f"Running {args.command}")
        code = self.handlers[args.command](args, self.config)
        logger.info(f"{args.command} finished with exit code {code}")
        return code
