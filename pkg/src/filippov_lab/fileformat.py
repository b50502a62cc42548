"""JSON definition files for every domain object, both directions.

The format is deliberately plain: a top-level kind and name, basis label
lists, brackets as lists of {"args": [...], "value": {label: rational}}
entries, matrices as row arrays of rational strings.  Entries with
repeated indices inside a skew slot contribute zero; several entries for
the same canonical slot accumulate.  Unknown fields are rejected so that
fixtures stay honest.
"""

import json

from .cohomology import Cochain
from .correspondences import (
    CrossedModule, SkeletalQuadruple, SymplecticThreeLie, ThreePreLie,
)
from .errors import BadRational, ParseError, UnknownKind
from .exactlin import Matrix, format_rational, parse_rational, skew_canon, \
    vec_is_zero, zero_vector
from .homotopy import Homomorphism, ThreeLie2Algebra, TwoHomomorphism
from .trilie import Representation, ThreeLieAlgebra

KINDS = (
    "three_lie", "representation", "two_term", "homomorphism",
    "two_homomorphism", "crossed_module", "symplectic", "quadruple",
    "pre_lie",
)


class DefinitionFile:
    def __init__(self, kind, name, payload):
        self.kind = kind
        self.name = name
        self.payload = payload


def parse_definition(text) -> DefinitionFile:
    """Definition-file text to a domain object, or a position-tagged error."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    kind = doc.get("kind")
    if kind is None:
        raise ParseError("missing 'kind'")
    if kind not in KINDS:
        raise UnknownKind("unknown kind %r" % (kind,))
    name = doc.get("name", "")
    parser = _PARSERS[kind]
    payload = parser({k: v for k, v in doc.items() if k not in ("kind", "name")})
    return DefinitionFile(kind, name, payload)


def _reject_unknown(doc, allowed, where):
    extra = sorted(set(doc) - set(allowed))
    if extra:
        raise ParseError("unknown fields %s in %s" % (extra, where))


def _need(doc, key, where):
    if key not in doc:
        raise ParseError("missing %r in %s" % (key, where))
    return doc[key]


def _labels(doc, key, dim, where):
    labels = _need(doc, key, where)
    if not isinstance(labels, list) or len(labels) != dim \
            or len(set(labels)) != dim:
        raise ParseError("%s.%s must list %d distinct labels" % (where, key, dim))
    return labels


def _index_map(labels):
    return {lab: i for i, lab in enumerate(labels)}


def _resolve(label, index, where):
    if label not in index:
        raise ParseError("unknown basis label %r in %s" % (label, where))
    return index[label]


def _value_vector(value, index, dim, where):
    if not isinstance(value, dict):
        raise ParseError("%s.value must map labels to rationals" % where)
    vec = [parse_rational("0")] * dim
    for label, text in value.items():
        vec[_resolve(label, index, where)] += parse_rational(text)
    return tuple(vec)


def _matrix(rows, nrows, ncols, where):
    if not isinstance(rows, list) or len(rows) != nrows \
            or any(not isinstance(r, list) or len(r) != ncols for r in rows):
        raise ParseError("%s must be a %dx%d row array" % (where, nrows, ncols))
    return Matrix.from_rows([[parse_rational(e) for e in row] for row in rows])


def _skew_entries(entries, arity, arg_index, value_index, value_dim, where):
    """Accumulate fully skew bracket entries into canonical slots."""
    table = {}
    for pos, entry in enumerate(entries):
        ctx = "%s[%d]" % (where, pos)
        if not isinstance(entry, dict):
            raise ParseError("%s must be an object" % ctx)
        _reject_unknown(entry, ("args", "value"), ctx)
        args = _need(entry, "args", ctx)
        if len(args) != arity:
            raise ParseError("%s.args must have %d labels" % (ctx, arity))
        idx = [_resolve(a, arg_index, ctx) for a in args]
        canon, sign = skew_canon(idx)
        vec = _value_vector(_need(entry, "value", ctx), value_index,
                            value_dim, ctx)
        if sign == 0:
            continue  # repeated index kills a skew slot
        if sign == -1:
            vec = tuple(-c for c in vec)
        key = tuple(canon)
        if key in table:
            table[key] = tuple(a + b for a, b in zip(table[key], vec))
        else:
            table[key] = vec
    return {k: v for k, v in table.items() if not vec_is_zero(v)}


# ---------------------------------------------------------------------------
# kind parsers
# ---------------------------------------------------------------------------

def _parse_three_lie(doc, where="three_lie"):
    _reject_unknown(doc, ("dim", "basis", "bracket"), where)
    dim = _need(doc, "dim", where)
    labels = _labels(doc, "basis", dim, where)
    index = _index_map(labels)
    bracket = _skew_entries(doc.get("bracket", []), 3, index, index, dim,
                            where + ".bracket")
    return ThreeLieAlgebra(dim, bracket, labels=labels)


def _parse_rho(entries, h_index, space_dim, where):
    rho = {}
    for pos, entry in enumerate(entries):
        ctx = "%s[%d]" % (where, pos)
        _reject_unknown(entry, ("args", "matrix"), ctx)
        args = _need(entry, "args", ctx)
        if len(args) != 2:
            raise ParseError("%s.args must have 2 labels" % ctx)
        idx = [_resolve(a, h_index, ctx) for a in args]
        canon, sign = skew_canon(idx)
        if sign == 0:
            continue
        mat = _matrix(_need(entry, "matrix", ctx), space_dim, space_dim, ctx)
        if sign == -1:
            mat = -mat
        key = tuple(canon)
        rho[key] = rho[key] + mat if key in rho else mat
    return {k: m for k, m in rho.items() if not m.is_zero()}


def _parse_representation(doc, where="representation"):
    _reject_unknown(doc, ("algebra", "space_dim", "rho"), where)
    algebra = _parse_three_lie(_need(doc, "algebra", where), where + ".algebra")
    space_dim = _need(doc, "space_dim", where)
    index = _index_map(algebra.labels)
    rho = _parse_rho(doc.get("rho", []), index, space_dim, where + ".rho")
    return algebra, Representation(algebra.dim, space_dim, rho)


def _parse_two_term(doc, where="two_term"):
    _reject_unknown(doc, ("dims", "basis", "d", "l3_v0", "l3_mixed", "l5"),
                    where)
    dims = _need(doc, "dims", where)
    _reject_unknown(dims, ("v0", "v1"), where + ".dims")
    n0, n1 = _need(dims, "v0", where), _need(dims, "v1", where)
    basis = _need(doc, "basis", where)
    _reject_unknown(basis, ("v0", "v1"), where + ".basis")
    labels0 = _labels(basis, "v0", n0, where + ".basis")
    labels1 = _labels(basis, "v1", n1, where + ".basis")
    idx0, idx1 = _index_map(labels0), _index_map(labels1)
    d = _matrix(_need(doc, "d", where), n0, n1, where + ".d")
    l3_000 = _skew_entries(doc.get("l3_v0", []), 3, idx0, idx0, n0,
                           where + ".l3_v0")
    l3_001 = {}
    for pos, entry in enumerate(doc.get("l3_mixed", [])):
        ctx = "%s.l3_mixed[%d]" % (where, pos)
        _reject_unknown(entry, ("args", "value"), ctx)
        args = _need(entry, "args", ctx)
        if len(args) != 3:
            raise ParseError("%s.args must have 3 labels" % ctx)
        i = _resolve(args[0], idx0, ctx)
        j = _resolve(args[1], idx0, ctx)
        a = _resolve(args[2], idx1, ctx)
        (ci, cj), sign = skew_canon((i, j))
        vec = _value_vector(_need(entry, "value", ctx), idx1, n1, ctx)
        if sign == 0:
            continue
        if sign == -1:
            vec = tuple(-c for c in vec)
        key = (ci, cj, a)
        l3_001[key] = tuple(x + y for x, y in zip(l3_001[key], vec)) \
            if key in l3_001 else vec
    l3_001 = {k: v for k, v in l3_001.items() if not vec_is_zero(v)}
    l5 = {}
    for pos, entry in enumerate(doc.get("l5", [])):
        ctx = "%s.l5[%d]" % (where, pos)
        _reject_unknown(entry, ("args", "value"), ctx)
        args = _need(entry, "args", ctx)
        if len(args) != 5:
            raise ParseError("%s.args must have 5 labels" % ctx)
        idx = [_resolve(a, idx0, ctx) for a in args]
        pair, s1 = skew_canon(idx[:2])
        triple, s2 = skew_canon(idx[2:])
        sign = s1 * s2
        vec = _value_vector(_need(entry, "value", ctx), idx1, n1, ctx)
        if sign == 0:
            continue
        if sign == -1:
            vec = tuple(-c for c in vec)
        key = pair + triple
        l5[key] = tuple(x + y for x, y in zip(l5[key], vec)) \
            if key in l5 else vec
    l5 = {k: v for k, v in l5.items() if not vec_is_zero(v)}
    return ThreeLie2Algebra(n0, n1, d, l3_000, l3_001, l5,
                            labels0=labels0, labels1=labels1)


def _parse_homomorphism(doc, where="homomorphism"):
    _reject_unknown(doc, ("source", "target", "phi0", "phi1", "phi2"), where)
    source = _parse_two_term(_need(doc, "source", where), where + ".source")
    target = _parse_two_term(_need(doc, "target", where), where + ".target")
    phi0 = _matrix(_need(doc, "phi0", where), target.dim0, source.dim0,
                   where + ".phi0")
    phi1 = _matrix(_need(doc, "phi1", where), target.dim1, source.dim1,
                   where + ".phi1")
    idx0 = _index_map(source.labels0)
    idx1p = _index_map(target.labels1)
    phi2 = _skew_entries(doc.get("phi2", []), 3, idx0, idx1p, target.dim1,
                         where + ".phi2")
    return Homomorphism(source, target, phi0, phi1, phi2)


def _parse_two_homomorphism(doc, where="two_homomorphism"):
    _reject_unknown(doc, ("source", "target", "tau"), where)
    source = _parse_homomorphism(_need(doc, "source", where), where + ".source")
    target = _parse_homomorphism(_need(doc, "target", where), where + ".target")
    tau = _matrix(_need(doc, "tau", where), source.target.dim1,
                  source.source.dim0, where + ".tau")
    return TwoHomomorphism(source, target, tau)


def _parse_crossed_module(doc, where="crossed_module"):
    _reject_unknown(doc, ("g", "h", "mu", "alpha"), where)
    g = _parse_three_lie(_need(doc, "g", where), where + ".g")
    h = _parse_three_lie(_need(doc, "h", where), where + ".h")
    mu = _matrix(_need(doc, "mu", where), h.dim, g.dim, where + ".mu")
    alpha = _parse_rho(doc.get("alpha", []), _index_map(h.labels), g.dim,
                       where + ".alpha")
    return CrossedModule(g, h, mu, Representation(h.dim, g.dim, alpha))


def _parse_symplectic(doc, where="symplectic"):
    _reject_unknown(doc, ("algebra", "omega"), where)
    algebra = _parse_three_lie(_need(doc, "algebra", where), where + ".algebra")
    omega = _matrix(_need(doc, "omega", where), algebra.dim, algebra.dim,
                    where + ".omega")
    return SymplecticThreeLie(algebra, omega)


def _parse_quadruple(doc, where="quadruple"):
    _reject_unknown(doc, ("algebra", "space_dim", "rho", "theta"), where)
    algebra = _parse_three_lie(_need(doc, "algebra", where), where + ".algebra")
    space_dim = _need(doc, "space_dim", where)
    idx = _index_map(algebra.labels)
    vlabels = ["v%d" % (i + 1) for i in range(space_dim)]
    vindex = _index_map(vlabels)
    rho = _parse_rho(doc.get("rho", []), idx, space_dim, where + ".rho")
    theta_vals = {}
    for pos, entry in enumerate(doc.get("theta", [])):
        ctx = "%s.theta[%d]" % (where, pos)
        _reject_unknown(entry, ("args", "value"), ctx)
        args = _need(entry, "args", ctx)
        if len(args) != 5:
            raise ParseError("%s.args must have 5 labels (x1,y1,x2,y2,z)" % ctx)
        ai = [_resolve(a, idx, ctx) for a in args]
        p1, s1 = skew_canon(ai[:2])
        p2, s2 = skew_canon(ai[2:4])
        sign = s1 * s2
        vec = _value_vector(_need(entry, "value", ctx), vindex, space_dim, ctx)
        if sign == 0:
            continue
        if sign == -1:
            vec = tuple(-c for c in vec)
        key = ((tuple(p1), tuple(p2)), ai[4])
        theta_vals[key] = tuple(x + y for x, y in zip(theta_vals[key], vec)) \
            if key in theta_vals else vec
    theta = Cochain(3, algebra.dim, space_dim, theta_vals)
    return SkeletalQuadruple(algebra, space_dim,
                             Representation(algebra.dim, space_dim, rho), theta)


def _parse_pre_lie(doc, where="pre_lie"):
    _reject_unknown(doc, ("dim", "basis", "bracket"), where)
    dim = _need(doc, "dim", where)
    labels = _labels(doc, "basis", dim, where)
    index = _index_map(labels)
    table = {}
    for pos, entry in enumerate(doc.get("bracket", [])):
        ctx = "%s.bracket[%d]" % (where, pos)
        _reject_unknown(entry, ("args", "value"), ctx)
        args = _need(entry, "args", ctx)
        if len(args) != 3:
            raise ParseError("%s.args must have 3 labels" % ctx)
        i = _resolve(args[0], index, ctx)
        j = _resolve(args[1], index, ctx)
        k = _resolve(args[2], index, ctx)
        (ci, cj), sign = skew_canon((i, j))
        vec = _value_vector(_need(entry, "value", ctx), index, dim, ctx)
        if sign == 0:
            continue  # skew only in the first two slots
        if sign == -1:
            vec = tuple(-c for c in vec)
        key = (ci, cj, k)
        table[key] = tuple(x + y for x, y in zip(table[key], vec)) \
            if key in table else vec
    table = {k: v for k, v in table.items() if not vec_is_zero(v)}
    return ThreePreLie(dim, table, labels=labels)


_PARSERS = {
    "three_lie": _parse_three_lie,
    "representation": _parse_representation,
    "two_term": _parse_two_term,
    "homomorphism": _parse_homomorphism,
    "two_homomorphism": _parse_two_homomorphism,
    "crossed_module": _parse_crossed_module,
    "symplectic": _parse_symplectic,
    "quadruple": _parse_quadruple,
    "pre_lie": _parse_pre_lie,
}


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _matrix_doc(mat):
    return [[format_rational(mat[i, j]) for j in range(mat.cols)]
            for i in range(mat.rows)]


def _value_doc(vec, labels):
    return {labels[i]: format_rational(c)
            for i, c in enumerate(vec) if c != 0}


def _three_lie_doc(algebra):
    return {
        "dim": algebra.dim,
        "basis": list(algebra.labels),
        "bracket": [
            {"args": [algebra.labels[i], algebra.labels[j], algebra.labels[k]],
             "value": _value_doc(vec, algebra.labels)}
            for (i, j, k), vec in sorted(algebra.bracket.items())],
    }


def _two_term_doc(L):
    return {
        "dims": {"v0": L.dim0, "v1": L.dim1},
        "basis": {"v0": list(L.labels0), "v1": list(L.labels1)},
        "d": _matrix_doc(L.d),
        "l3_v0": [
            {"args": [L.labels0[i], L.labels0[j], L.labels0[k]],
             "value": _value_doc(vec, L.labels0)}
            for (i, j, k), vec in sorted(L.l3_000.items())],
        "l3_mixed": [
            {"args": [L.labels0[i], L.labels0[j], L.labels1[a]],
             "value": _value_doc(vec, L.labels1)}
            for (i, j, a), vec in sorted(L.l3_001.items())],
        "l5": [
            {"args": [L.labels0[i], L.labels0[j], L.labels0[k],
                      L.labels0[l], L.labels0[m]],
             "value": _value_doc(vec, L.labels1)}
            for (i, j, k, l, m), vec in sorted(L.l5.items())],
    }


def _rho_doc(rep, labels):
    return [{"args": [labels[i], labels[j]], "matrix": _matrix_doc(mat)}
            for (i, j), mat in sorted(rep.rho.items())]


def _crossed_module_doc(cm):
    return {
        "g": _three_lie_doc(cm.g),
        "h": _three_lie_doc(cm.h),
        "mu": _matrix_doc(cm.mu),
        "alpha": _rho_doc(cm.alpha, cm.h.labels),
    }


def _quadruple_doc(q):
    labels = q.algebra.labels
    vlabels = ["v%d" % (i + 1) for i in range(q.space_dim)]
    theta = []
    for (pairs, z), vec in sorted(q.theta.values.items()):
        (i, j), (k, l) = pairs
        theta.append({"args": [labels[i], labels[j], labels[k], labels[l],
                               labels[z]],
                      "value": _value_doc(vec, vlabels)})
    return {
        "algebra": _three_lie_doc(q.algebra),
        "space_dim": q.space_dim,
        "rho": _rho_doc(q.rho, labels),
        "theta": theta,
    }


def _symplectic_doc(s):
    return {"algebra": _three_lie_doc(s.algebra),
            "omega": _matrix_doc(s.omega)}


def _pre_lie_doc(p):
    return {
        "dim": p.dim,
        "basis": list(p.labels),
        "bracket": [
            {"args": [p.labels[i], p.labels[j], p.labels[k]],
             "value": _value_doc(vec, p.labels)}
            for (i, j, k), vec in sorted(p.bracket.items())],
    }


def _homomorphism_doc(phi):
    return {
        "source": _two_term_doc(phi.source),
        "target": _two_term_doc(phi.target),
        "phi0": _matrix_doc(phi.phi0),
        "phi1": _matrix_doc(phi.phi1),
        "phi2": [
            {"args": [phi.source.labels0[i], phi.source.labels0[j],
                      phi.source.labels0[k]],
             "value": _value_doc(vec, phi.target.labels1)}
            for (i, j, k), vec in sorted(phi.phi2.items())],
    }


def serialize_definition(kind, name, payload) -> str:
    """Canonical JSON text for a domain object; reparses to equal data."""
    if kind == "three_lie":
        body = _three_lie_doc(payload)
    elif kind == "two_term":
        body = _two_term_doc(payload)
    elif kind == "crossed_module":
        body = _crossed_module_doc(payload)
    elif kind == "quadruple":
        body = _quadruple_doc(payload)
    elif kind == "symplectic":
        body = _symplectic_doc(payload)
    elif kind == "pre_lie":
        body = _pre_lie_doc(payload)
    elif kind == "homomorphism":
        body = _homomorphism_doc(payload)
    elif kind == "representation":
        algebra, rep = payload
        body = {"algebra": _three_lie_doc(algebra),
                "space_dim": rep.space_dim,
                "rho": _rho_doc(rep, algebra.labels)}
    elif kind == "two_homomorphism":
        body = {"source": _homomorphism_doc(payload.source),
                "target": _homomorphism_doc(payload.target),
                "tau": _matrix_doc(payload.tau)}
    else:
        raise UnknownKind("cannot serialize kind %r" % (kind,))
    doc = {"kind": kind, "name": name}
    doc.update(body)
    return json.dumps(doc, indent=2) + "\n"
