"""klrspecht utilities."""
import re

import yaml


class SettingError(ValueError):
    """Quiver setting (e, charge, characteristic) is not valid for the request."""


class ShapeError(ValueError):
    """Multipartition or node does not fit the requested operation.

    Raised for unparseable shape strings, mismatched sizes or levels and
    nodes that are not addable or removable where one is required

    """


class NotGarnirNodeError(ValueError):
    """Node (l, r, c) has no node (l, r+1, c) below it in the shape."""


class NotKleshchevError(ValueError):
    """Multipartition is not reachable from the empty one by good nodes."""


class StraighteningError(RuntimeError):
    """Straightening engine could not rewrite an element in the standard basis.

    This signals an implementation fault: the recursion depth guard
    tripped, Garnir bookkeeping was inconsistent or the bilinear form
    extraction left a residual

    """


class RankCapError(ValueError):
    """Fock space operator would produce a multipartition above the rank cap."""


class DecompositionError(RuntimeError):
    """Character system could not be solved for Laurent polynomial multiplicities."""


_OUTPUT_FORMATS = ("json", "csv", "text")
_REDUCED_WORDS = ("lexmin", "lexmax")
_PART_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def is_prime(p):
    """Trial division primality test for small characteristics."""
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def parse_e(value):
    """Convert a quantum characteristic to an int, or None for infinity.

    Parameters
    ----------
    value: str or int or None
        Integer e >= 2, or one of "inf", "infinity", "oo"

    Returns
    -------
    e: int or None

    """
    if value is None:
        return None
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "oo", "∞"):
            return None
        try:
            value = int(text)
        except ValueError:
            raise SettingError("Cannot parse e={!r}".format(value))
    if isinstance(value, float) and value == float("inf"):
        return None
    value = int(value)
    if value < 2:
        raise SettingError("e must be at least 2, got {}".format(value))
    return value


def format_e(e):
    """Serialise e as an integer or the literal "inf"."""
    return "inf" if e is None else str(e)


def parse_charge(value):
    """Convert "0,2" (or a list of ints) to a charge tuple."""
    if isinstance(value, int):
        return (value,)
    if isinstance(value, str):
        tokens = [tok for tok in value.replace(" ", "").split(",") if tok != ""]
        try:
            value = [int(tok) for tok in tokens]
        except ValueError:
            raise SettingError("Cannot parse charge {!r}".format(value))
    charge = tuple(int(k) for k in value)
    if not charge:
        raise SettingError("Charge must have at least one entry")
    return charge


def parse_characteristic(value):
    """Characteristic must be 0 or a prime."""
    try:
        p = int(value)
    except (TypeError, ValueError):
        raise SettingError("Cannot parse characteristic {!r}".format(value))
    if p != 0 and not is_prime(p):
        raise SettingError("Characteristic must be 0 or prime, got {}".format(p))
    return p


def parse_residue_word(text):
    """Residue word from "01100" (one digit per residue) or "0,-1,1"."""
    text = str(text).strip()
    try:
        if "," in text:
            return tuple(int(tok) for tok in text.split(",") if tok.strip())
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise ShapeError("Cannot parse residue word {!r}".format(text))


def parse_int_list(value, what="value"):
    """Comma separated integers (or a YAML list) as a tuple."""
    if isinstance(value, (list, tuple)):
        tokens = list(value)
    else:
        tokens = [tok for tok in str(value).split(",") if tok.strip()]
    try:
        return tuple(int(tok) for tok in tokens)
    except ValueError:
        raise SettingError("Cannot parse {} {!r}".format(what, value))


def _parse_component(text):
    text = text.strip()
    if text in ("", "0", "∅", "-"):
        return ()
    parts = []
    for token in text.split(","):
        match = _PART_RE.match(token)
        if match is None:
            raise ShapeError("Cannot parse part {!r} in {!r}".format(token, text))
        part = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        if part == 0:
            continue
        parts.extend([part] * repeat)
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise ShapeError("Parts must weakly decrease: {!r}".format(text))
    return tuple(parts)


def parse_shape(text, level=None):
    """Parse the shape grammar into a tuple of partitions.

    Components are separated by '|', parts by ',' and '^' repeats a part,
    so "3,2^2,1^2" is (3,2,2,1,1) and "7,6,3,2|4,3,1" has level 2.
    The empty partition is written "0" (or left empty).

    Parameters
    ----------
    text: str
        Shape string
    level: int, optional
        Pad with empty components up to this level

    Returns
    -------
    components: tuple of tuples

    """
    if not isinstance(text, str):
        raise ShapeError("Shape must be a string, got {!r}".format(text))
    components = [_parse_component(comp) for comp in text.split("|")]
    if level is not None:
        if len(components) > level:
            raise ShapeError(
                "Shape {!r} has {} components, level is {}".format(
                    text, len(components), level
                )
            )
        components.extend([()] * (level - len(components)))
    return tuple(components)


def read_yaml(filename):
    """Read a run configuration .yaml file.

    Returns an empty dictionary for files that do not hold a YAML mapping,
    drops keys with empty values and rejects settings that cannot be used.

    """
    with open(filename, "r") as stream:
        try:
            data = yaml.safe_load(stream)
        except yaml.YAMLError:
            return {}

    if not isinstance(data, dict):
        return {}

    # remove empty keys
    for key in list(data.keys()):
        if data[key] is None:
            del data[key]

    if "characteristic" in data:
        try:
            data["characteristic"] = parse_characteristic(data["characteristic"])
        except SettingError as err:
            raise RuntimeError("{}, exiting".format(err))
    if "format" in data and data["format"] not in _OUTPUT_FORMATS:
        raise RuntimeError(
            "Unknown output format {!r}, exiting".format(data["format"])
        )
    if "reduced_words" in data and data["reduced_words"] not in _REDUCED_WORDS:
        raise RuntimeError(
            "Unknown reduced word convention {!r}, exiting".format(data["reduced_words"])
        )
    if "shapes" in data and isinstance(data["shapes"], str):
        data["shapes"] = [data["shapes"]]
    return data


# -fin-
