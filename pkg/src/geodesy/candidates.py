"""Candidate files, reference embeddings, and the witness-to-candidate lift.

The JSON wire format stores every matrix entry as four decimal integer
strings [re_num, re_den, im_num, im_den], which crosses the file boundary
without any rounding.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List

from .algebra import SuPQShape
from .checker import EmbeddingCandidate
from .gaussmat import ZERO, GaussMatrix, GaussRational, I
from .ladder import (
    CROSS,
    MINUS_RAISE,
    PLUS_RAISE,
    DatumClassification,
    WitnessError,
    instantiate_witness,
)

class CandidateFormatError(ValueError):
    """Malformed candidate document; the message carries a field diagnostic."""


def _entry_to_json(g: GaussRational) -> List[str]:
    return [
        str(g.re.numerator),
        str(g.re.denominator),
        str(g.im.numerator),
        str(g.im.denominator),
    ]


def _entry_from_json(raw, where: str) -> GaussRational:
    if not isinstance(raw, (list, tuple)) or len(raw) != 4:
        raise CandidateFormatError(f"{where}: entry must be a 4-item list")
    parts = []
    for k, piece in enumerate(raw):
        if isinstance(piece, bool) or not isinstance(piece, (str, int)):
            raise CandidateFormatError(f"{where}[{k}]: expected a decimal integer string")
        try:
            parts.append(int(piece))
        except ValueError:
            raise CandidateFormatError(f"{where}[{k}]: {piece!r} is not a decimal integer")
    if parts[1] == 0 or parts[3] == 0:
        raise CandidateFormatError(f"{where}: zero denominator")
    return GaussRational(Fraction(parts[0], parts[1]), Fraction(parts[2], parts[3]))


def _matrix_to_json(m: GaussMatrix) -> list:
    return [[_entry_to_json(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def _matrix_from_json(raw, n: int, name: str) -> GaussMatrix:
    if not isinstance(raw, list) or len(raw) != n:
        raise CandidateFormatError(f"{name}: expected {n} rows")
    data = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n:
            raise CandidateFormatError(f"{name}[{i}]: expected {n} entries")
        data.append([_entry_from_json(e, f"{name}[{i}][{j}]") for j, e in enumerate(row)])
    return GaussMatrix(data)


def candidate_to_json_dict(c: EmbeddingCandidate) -> dict:
    return {
        "p": c.shape.p,
        "f_u": _matrix_to_json(c.f_u),
        "f_v": _matrix_to_json(c.f_v),
        "f_w": _matrix_to_json(c.f_w),
    }


def candidate_from_json_dict(doc) -> EmbeddingCandidate:
    if not isinstance(doc, dict):
        raise CandidateFormatError("top level: expected an object")
    if "p" not in doc:
        raise CandidateFormatError("top level: missing field 'p'")
    p = doc["p"]
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise CandidateFormatError("p: must be a positive integer")
    n = 2 * p
    mats = {}
    for name in ("f_u", "f_v", "f_w"):
        if name not in doc:
            raise CandidateFormatError(f"top level: missing field '{name}'")
        mats[name] = _matrix_from_json(doc[name], n, name)
    try:
        return EmbeddingCandidate(shape=SuPQShape(p), **mats)
    except ValueError as err:
        raise CandidateFormatError(str(err))


def save_candidate(c: EmbeddingCandidate, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(candidate_to_json_dict(c), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_candidate(path) -> EmbeddingCandidate:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as err:
            raise CandidateFormatError(f"line {err.lineno}, column {err.colno}: {err.msg}")
    return candidate_from_json_dict(doc)


# ----------------------------------------------------------------------
# Reference embeddings


def embedding_with_rank(p: int, m: int) -> EmbeddingCandidate:
    """m copies of the standard representation padded by 2(p - m) trivials.

    The images are built from the projection D = diag(1,...,1,0,...,0):
    F(u) = (0 D; D 0), F(v) = (0 iD; -iD 0), F(w) = (iD 0; 0 -iD).
    """
    if not (0 <= m <= p):
        raise ValueError("need 0 <= m <= p")
    d = GaussMatrix.diagonal([1] * m + [0] * (p - m))
    zero = GaussMatrix.zeros(p, p)
    f_u = GaussMatrix.block([[zero, d], [d, zero]])
    f_v = GaussMatrix.block([[zero, d * I], [d * (-I), zero]])
    f_w = GaussMatrix.block([[d * I, zero], [zero, d * (-I)]])
    return EmbeddingCandidate(shape=SuPQShape(p), f_u=f_u, f_v=f_v, f_w=f_w)


def diagonal_candidate(p: int) -> EmbeddingCandidate:
    return embedding_with_rank(p, p)


def standard_trivial_candidate(p: int) -> EmbeddingCandidate:
    return embedding_with_rank(p, 1)


# ----------------------------------------------------------------------
# Witness lift


def _place(entries: list, n: int, r0: int, c0: int, block: GaussMatrix, conj: bool, negate: bool):
    src = block.conj_transpose() if conj else block
    if negate:
        src = -src
    for i in range(src.rows):
        for j in range(src.cols):
            entries[(r0 + i) * n + (c0 + j)] = src[i, j]


def lift_classification(result: DatumClassification) -> EmbeddingCandidate:
    """Assemble the candidate realized by a feasible classification.

    Raising blocks are zero, crossing blocks are exact unitary multiples;
    the resulting triple is F(u) = X + Y, F(v) = i(X - Y), F(w) = i H with
    H the diagonal weight operator.
    """
    if result.status != "feasible":
        raise WitnessError("only feasible classifications lift to a candidate")
    wd = result.weight_data
    if wd.dim_plus != wd.dim_minus:
        raise WitnessError("lift needs equal block dimensions")
    p = wd.dim_plus
    n = 2 * p
    layout = wd.layout()

    values: Dict[str, GaussMatrix] = {}
    for system, verdict in (
        (result.odd_system, result.odd),
        (result.even_system, result.even),
    ):
        values.update(instantiate_witness(system, verdict.witness))
    unknowns = {**result.odd_system.unknowns, **result.even_system.unknowns}

    x_entries = [ZERO] * (n * n)
    y_entries = list(x_entries)
    for label, value in sorted(values.items()):
        u = unknowns[label]
        tgt_side = "minus" if u.kind == MINUS_RAISE else "plus"
        src_side = "plus" if u.kind == PLUS_RAISE else "minus"
        r0, _ = layout.span(tgt_side, u.target_weight)
        c0, _ = layout.span(src_side, u.source_weight)
        _place(x_entries, n, r0, c0, value, conj=False, negate=False)
        # the partner matrix carries the conjugate transpose at the mirrored
        # slot, negated for the two raising kinds
        _place(y_entries, n, c0, r0, value, conj=True, negate=(u.kind != CROSS))

    x = GaussMatrix._raw(n, n, tuple(x_entries))
    y = GaussMatrix._raw(n, n, tuple(y_entries))
    h = GaussMatrix.diagonal(layout.weight_vector())
    f_u = x + y
    f_v = (x - y) * I
    f_w = h * I
    return EmbeddingCandidate(shape=SuPQShape(p), f_u=f_u, f_v=f_v, f_w=f_w)
