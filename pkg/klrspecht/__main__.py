"""Command line options shared by all klrspecht subcommands."""
import argparse

import klrspecht

COMMANDS = (
    ("tabs", "List standard tableaux with residue words, degrees and codegrees"),
    ("gram", "Integer Gram matrix of the graded Specht module"),
    ("char", "Graded Specht and simple characters"),
    ("decomp", "Graded decomposition matrix"),
    ("adjust", "Adjustment matrix for a prime characteristic"),
    ("crystal", "Kleshchev multipartitions, good node edges and the Mullineux map"),
    ("fock-check", "Quantum group relations on the Fock space"),
    ("degstats", "Degree statistics deg_(e,i), deg_e and Deg_p"),
    ("verify", "Relation, oracle and property suites"),
)


def shared_options(parser):
    """Add the setting, output and engine option groups.

    Parameters
    ----------
    parser: `argparse.ArgumentParser`
        Parser (or subparser) to populate

    Returns
    -------
    parser: `argparse.ArgumentParser`

    """
    group = parser.add_argument_group(
        title="Setting options", description="Quiver setting and shapes"
    )
    group.add_argument("--e", type=str, help="Quantum characteristic, integer >= 2 or 'inf'")
    group.add_argument("--charge", type=str, help="Multicharge, comma separated integers")
    group.add_argument(
        "--shape",
        dest="shapes",
        action="append",
        help="Multipartition such as '3,2^2,1^2' or '2,1|1' (repeatable)",
    )
    group.add_argument("--n", type=int, help="Use every multipartition of n")
    group.add_argument(
        "--char", dest="characteristic", type=str, help="Field characteristic, 0 or a prime"
    )
    group.add_argument(
        "--yaml", type=str, help="Run configuration file, keys as the long options"
    )

    group = parser.add_argument_group(
        title="Output options", description="Report format and verbosity"
    )
    group.add_argument(
        "--format",
        dest="output_format",
        choices=["json", "csv", "text"],
        help="Report format (default from KLRSPECHT_FORMAT, else text)",
    )
    group.add_argument(
        "--debug", action="store_true", help="verbose logger output for debugging"
    )
    group.add_argument(
        "--trace", action="store_true", help="Rewrite step logger output for debugging"
    )

    group = parser.add_argument_group(
        title="Engine options", description="Straightening engine and Fock space bounds"
    )
    group.add_argument("--rank-cap", type=int, help="Largest Fock space rank (default 6)")
    group.add_argument(
        "--depth-guard", type=int, help="Maximum nesting of straightening rewrites"
    )
    group.add_argument(
        "--reduced-words",
        type=str,
        help="'lexmin', 'lexmax' or a YAML file with a reduced_words key",
    )
    return parser


def command_options(name, parser):
    """Options that only one subcommand understands."""
    if name == "gram":
        parser.add_argument(
            "--block", type=str, help="Restrict to the weight space of this residue word"
        )
        parser.add_argument(
            "--snf", action="store_true", help="Report elementary divisors and ranks"
        )
    elif name == "degstats":
        parser.add_argument(
            "--e-list", type=str, help="Comma separated quantum characteristics, 'inf' allowed"
        )
        parser.add_argument("--primes", type=str, help="Comma separated primes for Deg_p")
    elif name == "verify":
        parser.add_argument(
            "--suite",
            dest="suites",
            action="append",
            help="Suite to run (repeatable, default all light suites)",
        )
        parser.add_argument(
            "--slow", action="store_true", help="Also run the decomp and fock suites"
        )
    return parser


def cli(prog, parser=None, args=None):
    """Parse the klrspecht command line.

    Parameters
    ----------
    prog: str
        Program name for the usage string
    parser: `argparse.ArgumentParser`, optional
        Parser to populate instead of a new one
    args: list of str, optional
        Arguments to parse, sys.argv by default

    Returns
    -------
    opts: `argparse.Namespace`

    """
    if parser is None:
        usage = "%s <command> [options]" % prog
        description = """Exact computations with graded Specht modules of cyclotomic
                         quiver Hecke algebras of type A.
                         Every command reads the setting from --e/--charge or --yaml."""
        parser = argparse.ArgumentParser(
            prog=prog,
            usage=usage,
            description=description,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
    parser.add_argument("--version", action="version", version=klrspecht.__version__)

    subparsers = parser.add_subparsers(dest="command", metavar="<command>")
    subparsers.required = True
    for name, help_text in COMMANDS:
        subparser = subparsers.add_parser(
            name,
            help=help_text,
            description=help_text,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        shared_options(subparser)
        command_options(name, subparser)

    return parser.parse_args(args=args)


if __name__ == "__main__":
    import sys

    from klrspecht.run_main import main

    sys.exit(main(sys.argv[1:]))

# -fin-
