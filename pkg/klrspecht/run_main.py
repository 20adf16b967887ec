"""Assemble a run configuration, dispatch a subcommand and render its report."""
from __future__ import absolute_import

import csv
import json
import os
import sys

from collections import OrderedDict, namedtuple

from six.moves import StringIO

import klrspecht

from .combinat import (
    Multipartition,
    Setting,
    crystal_edges,
    good_path,
    integer_contents,
    is_kleshchev,
    kleshchev_set,
    mullineux,
    multipartitions,
    residue_sequence,
    standard_tableaux,
    tableau_codegree,
    tableau_degree,
    tableau_permutation,
)
from .decomp import adjustment_matrix, decomposition_matrix, degree_stats
from .fockspace import DEFAULT_RANK_CAP, check_relations
from .logger import set_verbosity, user_logger
from .spechtmod import (
    dual_specht_character,
    gram_block,
    gram_matrix,
    simple_character,
    specht_character,
)
from .utility import (
    SettingError,
    ShapeError,
    format_e,
    is_prime,
    parse_characteristic,
    parse_e,
    parse_int_list,
    parse_residue_word,
    read_yaml,
)
from .verify import ALL_SUITES, LIGHT_SUITES, run_suites

FORMAT_ENV = "KLRSPECHT_FORMAT"
_FORMATS = ("json", "csv", "text")
_CONVENTIONS = ("lexmin", "lexmax")

RunConfig = namedtuple(
    "RunConfig",
    "command e charge n shapes characteristic output_format rank_cap depth_guard "
    "reduced_words block snf primes e_list suites",
)

Report = namedtuple("Report", "command setting sections passed")


def _option(opts, name):
    return getattr(opts, name, None)


def _first(*values):
    for value in values:
        if value is not None:
            return value
    return None


def _reduced_words(value):
    if value is None:
        return "lexmin"
    if value in _CONVENTIONS:
        return value
    if not os.path.isfile(value):
        raise SettingError("Unknown reduced word convention {!r}".format(value))
    convention = read_yaml(value).get("reduced_words", "lexmin")
    if convention not in _CONVENTIONS:
        raise SettingError("Unknown reduced word convention {!r}".format(convention))
    return convention


def build_config(opts, environ=None):
    """Merge defaults, the environment, the --yaml file and the flags.

    Parameters
    ----------
    opts: `argparse.Namespace`
        Parsed command line
    environ: dict, optional
        Environment, os.environ by default

    Returns
    -------
    config: RunConfig

    Raises
    ------
    SettingError, ShapeError
        If a value cannot be parsed

    """
    if environ is None:
        environ = os.environ
    data = read_yaml(opts.yaml) if _option(opts, "yaml") else {}

    output_format = _first(_option(opts, "output_format"), data.get("format"))
    if output_format is None:
        output_format = environ.get(FORMAT_ENV, "text") or "text"
    if output_format not in _FORMATS:
        raise SettingError("Unknown output format {!r}".format(output_format))

    e = parse_e(_first(_option(opts, "e"), data.get("e"), 2))
    charge = Setting(e, _first(_option(opts, "charge"), data.get("charge"), (0,))).charge
    level = len(charge)

    shapes = _first(_option(opts, "shapes"), data.get("shapes")) or []
    if isinstance(shapes, str):
        shapes = [shapes]
    shapes = tuple(Multipartition.parse(str(text), level) for text in shapes)

    e_list = _first(_option(opts, "e_list"), data.get("e_list"))
    if e_list is None:
        e_list = (e,)
    else:
        if isinstance(e_list, str):
            e_list = e_list.split(",")
        e_list = tuple(parse_e(value) for value in e_list)

    primes = _first(_option(opts, "primes"), data.get("primes"))
    primes = parse_int_list(primes, "primes") if primes is not None else ()
    if not all(is_prime(p) for p in primes):
        raise SettingError("Deg_p needs primes, got {}".format(primes))

    block = _option(opts, "block")
    suites = _first(_option(opts, "suites"), data.get("suites"))
    if suites is None:
        suites = ALL_SUITES if _option(opts, "slow") else LIGHT_SUITES

    return RunConfig(
        command=opts.command,
        e=e,
        charge=charge,
        n=_first(_option(opts, "n"), data.get("n")),
        shapes=shapes,
        characteristic=parse_characteristic(
            _first(_option(opts, "characteristic"), data.get("characteristic"), 0)
        ),
        output_format=output_format,
        rank_cap=int(_first(_option(opts, "rank_cap"), data.get("rank_cap"), DEFAULT_RANK_CAP)),
        depth_guard=_first(_option(opts, "depth_guard"), data.get("depth_guard")),
        reduced_words=_reduced_words(
            _first(_option(opts, "reduced_words"), data.get("reduced_words"))
        ),
        block=parse_residue_word(block) if block else None,
        snf=bool(_option(opts, "snf")),
        primes=primes,
        e_list=e_list,
        suites=tuple(suites),
    )


def _setting(config):
    return Setting(config.e, config.charge)


def _engine(config):
    return {"convention": config.reduced_words, "depth_guard": config.depth_guard}


def _shapes(config, setting):
    if config.shapes:
        return list(config.shapes)
    if config.n is not None:
        return multipartitions(setting, config.n)
    raise ShapeError("Give at least one --shape or --n")


def _size(config):
    if config.n is not None:
        return config.n
    sizes = {shape.size for shape in config.shapes}
    if len(sizes) != 1:
        raise ShapeError("Give --n or shapes of one size, got sizes {}".format(sorted(sizes)))
    return sizes.pop()


def _word(setting, word):
    return setting.format_word(word)


# subcommands


def run_tabs(config):
    setting = _setting(config)
    records = []
    for shape in _shapes(config, setting):
        for t in standard_tableaux(shape):
            records.append(
                OrderedDict(
                    [
                        ("shape", str(shape)),
                        ("tableau", str(t)),
                        ("residues", _word(setting, residue_sequence(setting, t))),
                        ("contents", list(integer_contents(setting, t))),
                        ("degree", tableau_degree(setting, t)),
                        ("codegree", tableau_codegree(setting, t)),
                        ("d(t)", list(tableau_permutation(t, config.reduced_words))),
                    ]
                )
            )
    return OrderedDict([("tableaux", records)]), True


def run_gram(config):
    setting = _setting(config)
    p = config.characteristic
    sections = OrderedDict()
    divisors = []
    for shape in _shapes(config, setting):
        if config.block is None:
            gram = gram_matrix(setting, shape, **_engine(config))
        else:
            gram = gram_block(setting, shape, config.block, **_engine(config))
        rows = []
        for k, label in enumerate(gram.rows):
            entries = [int(x) for x in gram.entries[k]]
            if p:
                entries = [x % p for x in entries]
            rows.append(
                OrderedDict(
                    [
                        ("tableau", label),
                        ("residues", _word(setting, gram.words[k])),
                        ("degree", gram.degrees[k]),
                        ("entries", entries),
                    ]
                )
            )
        sections["gram {}".format(shape)] = rows
        if config.snf:
            divisors.append(
                OrderedDict(
                    [
                        ("shape", str(shape)),
                        ("divisors", [int(d) for d in gram.smith_normal_form()]),
                        ("characteristic", p),
                        ("rank", gram.rank(p)),
                    ]
                )
            )
    if config.snf:
        sections["elementary divisors"] = divisors
    return sections, True


def run_char(config):
    setting = _setting(config)
    records = []
    for shape in _shapes(config, setting):
        specht = specht_character(setting, shape)
        dual = dual_specht_character(setting, shape)
        simple = simple_character(setting, shape, config.characteristic, **_engine(config))
        for word in sorted(set(specht) | set(simple)):
            records.append(
                OrderedDict(
                    [
                        ("shape", str(shape)),
                        ("residues", _word(setting, word)),
                        ("specht", str(specht.get(word, 0))),
                        ("dual_specht", str(dual.get(word, 0))),
                        ("simple", str(simple.get(word, 0))),
                    ]
                )
            )
    return OrderedDict([("characters", records)]), True


def _matrix_records(matrix):
    records = []
    for k, label in enumerate(matrix.rows):
        record = OrderedDict([("shape", str(label))])
        for j, col in enumerate(matrix.cols):
            record[str(col)] = str(matrix.entries[k, j])
        records.append(record)
    return records


def run_decomp(config):
    setting = _setting(config)
    dec = decomposition_matrix(
        setting,
        _size(config),
        config.characteristic,
        shapes=list(config.shapes) or None,
        **_engine(config)
    )
    return OrderedDict([("decomposition matrix", _matrix_records(dec))]), True


def run_adjust(config):
    if not config.characteristic:
        raise SettingError("adjust needs a prime characteristic, use --char p")
    setting = _setting(config)
    adj = adjustment_matrix(
        setting,
        _size(config),
        config.characteristic,
        shapes=list(config.shapes) or None,
        **_engine(config)
    )
    return OrderedDict([("adjustment matrix", _matrix_records(adj))]), True


def run_crystal(config):
    setting = _setting(config)
    n = _size(config)
    klesh = kleshchev_set(setting, n)
    ordered = [mu for mu in multipartitions(setting, n) if mu in klesh]
    sections = OrderedDict()
    if config.shapes:
        sections["shapes"] = [
            OrderedDict([("shape", str(shape)), ("kleshchev", is_kleshchev(setting, shape))])
            for shape in config.shapes
        ]
    sections["kleshchev"] = [
        OrderedDict(
            [
                ("shape", str(mu)),
                ("good_path", _word(setting, [i for i, _ in good_path(setting, mu)])),
                ("mullineux", str(mullineux(setting, mu))),
            ]
        )
        for mu in ordered
    ]
    sections["edges"] = [
        OrderedDict([("source", str(source)), ("residue", i), ("target", str(target))])
        for source, i, target in crystal_edges(setting, n)
    ]
    return sections, True


def run_fock_check(config):
    results = check_relations(_setting(config), config.rank_cap)
    records = [
        OrderedDict(
            [
                ("family", row.family),
                ("passed", row.passed),
                ("counterexample", row.counterexample or ""),
            ]
        )
        for row in results
    ]
    return OrderedDict([("fock relations", records)]), all(row.passed for row in results)


def run_degstats(config):
    setting = _setting(config)
    by_word, totals, primes = [], [], []
    for shape in _shapes(config, setting):
        stats = degree_stats(setting, shape, list(config.e_list), config.primes)
        for e, words in stats.by_word.items():
            layer = Setting(e, setting.charge)
            for word in sorted(words):
                by_word.append(
                    OrderedDict(
                        [
                            ("shape", str(shape)),
                            ("e", format_e(e)),
                            ("residues", _word(layer, word)),
                            ("deg", words[word]),
                        ]
                    )
                )
            totals.append(
                OrderedDict([("shape", str(shape)), ("e", format_e(e)), ("deg", stats.totals[e])])
            )
        for p, value in stats.prime_totals.items():
            primes.append(OrderedDict([("shape", str(shape)), ("p", p), ("Deg", value)]))
    sections = OrderedDict([("deg_(e,i)", by_word), ("deg_e", totals)])
    if config.primes:
        sections["Deg_p"] = primes
    return sections, True


def run_verify(config):
    setting = _setting(config)
    results = run_suites(
        setting,
        _size(config),
        suites=config.suites,
        characteristic=config.characteristic,
        depth_guard=config.depth_guard,
        rank_cap=config.rank_cap,
    )
    records = [
        OrderedDict(
            [
                ("suite", row.suite),
                ("check", row.name),
                ("passed", row.passed),
                ("detail", row.detail),
            ]
        )
        for row in results
    ]
    return OrderedDict([("checks", records)]), all(row.passed for row in results)


COMMANDS = OrderedDict(
    [
        ("tabs", run_tabs),
        ("gram", run_gram),
        ("char", run_char),
        ("decomp", run_decomp),
        ("adjust", run_adjust),
        ("crystal", run_crystal),
        ("fock-check", run_fock_check),
        ("degstats", run_degstats),
        ("verify", run_verify),
    ]
)


def run(config):
    """Run one subcommand and collect its report."""
    sections, passed = COMMANDS[config.command](config)
    return Report(config.command, str(_setting(config)), sections, passed)


# report rendering


def _cell(value):
    if isinstance(value, (list, tuple)):
        return ",".join(str(x) for x in value)
    return str(value)


def render_json(report):
    document = {
        "command": report.command,
        "setting": report.setting,
        "passed": report.passed,
        "sections": [
            {"title": title, "records": records} for title, records in report.sections.items()
        ],
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def render_csv(report):
    stream = StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    for title, records in report.sections.items():
        writer.writerow(["# {}".format(title)])
        if records:
            header = list(records[0].keys())
            writer.writerow(header)
            for record in records:
                writer.writerow([_cell(record.get(key, "")) for key in header])
    return stream.getvalue()


def render_text(report):
    lines = ["{} ({})".format(report.command, report.setting)]
    for title, records in report.sections.items():
        lines.append("")
        lines.append(title)
        if not records:
            lines.append("  (none)")
            continue
        header = list(records[0].keys())
        table = [header] + [[_cell(record.get(key, "")) for key in header] for record in records]
        widths = [max(len(row[k]) for row in table) for k in range(len(header))]
        for row in table:
            lines.append("  " + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    lines.append("")
    lines.append("passed" if report.passed else "FAILED")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def main(args):
    """Run a klrspecht command.

    Returns the process exit status: 0 on success, 1 when a verification
    fails or the engine stops, 2 for unusable options.

    """
    opts = klrspecht.cli(os.path.basename(sys.argv[0]) or "klrspecht", args=args)
    set_verbosity(debug=opts.debug, trace=opts.trace)

    try:
        config = build_config(opts)
    except (ValueError, RuntimeError) as err:
        user_logger.error("{}: {}".format(type(err).__name__, err))
        return 2

    try:
        report = run(config)
    except ValueError as err:
        user_logger.error("{}: {}".format(type(err).__name__, err))
        return 2
    except RuntimeError as err:
        user_logger.error("{}: {}".format(type(err).__name__, err))
        return 1

    sys.stdout.write(RENDERERS[config.output_format](report))
    if not report.passed:
        user_logger.error("{} reported failures".format(config.command))
        return 1
    return 0


# -fin-
