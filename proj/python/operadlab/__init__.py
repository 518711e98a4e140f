"""Exact symbolic computation for one-parameter operad deformations.

Thin convenience layer over the native ``_operadlab`` extension.  The core
exchanges matrices, relations, and reports as JSON strings so that exact
scalars (integers and polynomials in q over the rationals) cross the
boundary unchanged; this module converts to and from plain Python objects.
"""

import json

import _operadlab as _native

__all__ = [
    "matrix",
    "relation",
    "pipeline_names",
    "run_pipeline",
    "run_all",
    "verify",
    "hnf",
    "hnf_transform",
    "nullspace",
    "saturation",
    "rank",
    "lll_reduce",
    "lattice_equal",
    "specialize",
    "is_module_member",
    "render_relation",
    "extract_generators",
    "module_equal",
    "polarize",
    "expand_polarized",
    "split_expand",
    "poly_mul",
    "poly_eval",
]

__version__ = "1.0.0"


def matrix(entries, ring="Z"):
    """Build a matrix payload from a list of rows of ints or scalar strings."""
    rows = [[str(x) for x in row] for row in entries]
    return {
        "ring": ring,
        "rows": len(rows),
        "cols": len(rows[0]) if rows else 0,
        "entries": rows,
    }


def relation(space, coeffs, ring="Z"):
    """Build a relation payload on the named basis ("O1", "O2", "SO1", ...)."""
    return {"space": space, "ring": ring, "coeffs": [str(c) for c in coeffs]}


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def pipeline_names():
    return list(_native.pipeline_names())


def run_pipeline(name):
    """Run one pipeline and return its report as a dict."""
    return json.loads(_native.run_pipeline(name))


def run_all():
    return [run_pipeline(name) for name in pipeline_names()]


def verify():
    """True iff every check of every pipeline passes."""
    return _native.verify()


def hnf(m):
    return json.loads(_native.hnf(_dump(m)))


def hnf_transform(m):
    return json.loads(_native.hnf_transform(_dump(m)))


def nullspace(m):
    return json.loads(_native.nullspace(_dump(m)))


def saturation(m):
    return json.loads(_native.saturation(_dump(m)))


def rank(m):
    return _native.rank(_dump(m))


def lll_reduce(m, delta="3/4"):
    return json.loads(_native.lll_reduce(_dump(m), str(delta)))


def lattice_equal(a, b):
    return _native.lattice_equal(_dump(a), _dump(b))


def specialize(m, q):
    return json.loads(_native.specialize(_dump(m), str(q)))


def is_module_member(basis, row):
    """Whether ``row`` (a flat list of scalars) lies in the row module of ``basis``."""
    b = basis if isinstance(basis, dict) else json.loads(_dump(basis))
    candidate = matrix([list(row)], b["ring"])
    return _native.is_module_member(_dump(b), _dump(candidate))


def render_relation(r, unicode=False):
    return _native.render_relation(_dump(r), unicode)


def extract_generators(relations, minimize=False, membership="ring"):
    out = _native.extract_generators([_dump(r) for r in relations], minimize, membership)
    return [json.loads(r) for r in out]


def module_equal(a, b):
    return _native.module_equal([_dump(r) for r in a], [_dump(r) for r in b])


def polarize(r):
    return json.loads(_native.polarize(_dump(r)))


def expand_polarized(r):
    return json.loads(_native.expand_polarized(_dump(r)))


def split_expand(r):
    return json.loads(_native.split_expand(_dump(r)))


def poly_mul(a, b):
    return _native.poly_mul(a, b)


def poly_eval(p, q):
    return _native.poly_eval(p, str(q))
