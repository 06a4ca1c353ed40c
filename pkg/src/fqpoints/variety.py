"""Projective varieties over small finite fields, from text descriptions.

A variety document names a field, an ambient projective space, and a list of
components, each given by homogeneous generators. Loading runs the Groebner
pipeline per component (dimension and degree from Hilbert data), screens the
decomposition for containments, and keeps enough structure for the counting,
bound, and census layers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    BudgetExceededError,
    DeclarationMismatchError,
    DegenerateComponentError,
    NotHomogeneousError,
    ParseError,
)
from .gf import FieldSpec, make_field
from .groebner import GroebnerBasis, HilbertData, Ideal, buchberger, hilbert, normal_form
from .mpoly import GREVLEX, Polynomial, chart_transform, parse_poly
from .projgeom import LinearSubspace, ProjectivePoint, enumerate_points, pi

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class Component:
    """One component: its ideal, basis, Hilbert data, and linear structure."""

    name: str
    ideal: Ideal
    gb: GroebnerBasis
    hilbert: HilbertData
    dim: int
    degree: int
    irreducible_declared: bool
    hyperplane_forms: tuple  # degree-1 elements of the reduced basis
    is_linear: bool

    @property
    def empty(self) -> bool:
        return self.dim == -1

    def subspace(self) -> LinearSubspace:
        if not self.is_linear:
            raise ValueError(f"component {self.name} is not linear")
        mat = []
        for f in self.hyperplane_forms:
            row = [f.field.zero()] * f.nvars
            for exps, c in f.terms.items():
                row[exps.index(1)] = c
            mat.append(row)
        from .projgeom import nullspace
        sol = nullspace(mat, self.ideal.field, self.ideal.nvars)
        return LinearSubspace(self.ideal.field, self.ideal.nvars - 1, tuple(sol))


@dataclass(frozen=True)
class Variety:
    """A union of named components in a common P^n over a common field."""

    field: FieldSpec
    n: int
    components: tuple
    irredundancy: str  # "verified" | "unverified" | "violated"
    containments: tuple  # (inner_name, outer_name) certified pairs

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def max_dim(self) -> int:
        return max((c.dim for c in self.components), default=-1)

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise KeyError(f"no component named {name!r}")


@dataclass(frozen=True)
class PointCount:
    value: int
    method: str
    n: int
    q: int


def _build_component(name: str, texts: Sequence[str], field: FieldSpec,
                     nvars: int, declared_dim: Optional[int],
                     declared_deg: Optional[int],
                     irreducible_declared: bool) -> Component:
    gens = []
    for t in texts:
        g = parse_poly(t, field, nvars)
        if g.is_zero():
            continue  # canonical zero: drop, e.g. 2*x0 over GF(2)
        if not g.homogeneous:
            raise NotHomogeneousError(
                f"component {name}: generator {t!r} is not homogeneous")
        gens.append(g)
    if not gens:
        raise DegenerateComponentError(
            f"component {name} has the zero ideal and fills the ambient space")
    ideal = Ideal(field, nvars, tuple(gens))
    gb = buchberger(ideal, GREVLEX)
    hd = hilbert(gb)
    if hd.dim == nvars - 1:
        raise DegenerateComponentError(
            f"component {name} has full ambient dimension")
    if declared_dim is not None and declared_dim != hd.dim:
        raise DeclarationMismatchError(
            f"component {name}: declared dim={declared_dim}, computed {hd.dim}")
    if declared_deg is not None and declared_deg != hd.degree:
        raise DeclarationMismatchError(
            f"component {name}: declared deg={declared_deg}, computed {hd.degree}")
    linear_forms = tuple(g for g in gb.basis if g.degree() == 1)
    is_linear = bool(linear_forms) and all(
        normal_form(g, list(linear_forms), GREVLEX).is_zero() for g in gens)
    return Component(name, ideal, gb, hd, hd.dim, hd.degree,
                     irreducible_declared, linear_forms, is_linear)


def _parse_kv(parts: Sequence[str], line_no: int) -> dict:
    out = {}
    for part in parts:
        if "=" not in part:
            raise ParseError(f"line {line_no}: expected key=value, got {part!r}")
        key, _, val = part.partition("=")
        out[key.strip()] = val.strip()
    return out


def load_variety(text: str) -> Variety:
    """Parse and validate a variety document. See the package README for the
    format: `field`, `space`, then `component` blocks with `poly` lines."""
    field_spec = None
    n = None
    blocks = []  # (name, declared_dim, declared_deg, irred, [poly texts])
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "field":
            kv = _parse_kv(rest, line_no)
            if "p" not in kv or "k" not in kv:
                raise ParseError(f"line {line_no}: field needs p= and k=")
            field_spec = make_field(int(kv["p"]), int(kv["k"]),
                                    kv.get("modulus"))
        elif head == "space":
            kv = _parse_kv(rest, line_no)
            if "n" not in kv:
                raise ParseError(f"line {line_no}: space needs n=")
            n = int(kv["n"])
            if n < 1:
                raise ParseError(f"line {line_no}: ambient dimension must be >= 1")
        elif head == "component":
            kv = _parse_kv(rest, line_no)
            if "name" not in kv:
                raise ParseError(f"line {line_no}: component needs name=")
            irred_txt = kv.get("irreducible", "")
            if irred_txt not in ("", "yes", "declared"):
                raise ParseError(
                    f"line {line_no}: irreducible must be yes or declared")
            blocks.append((kv["name"],
                           int(kv["dim"]) if "dim" in kv else None,
                           int(kv["deg"]) if "deg" in kv else None,
                           irred_txt in ("yes", "declared"),
                           []))
        elif head == "poly":
            if not blocks:
                raise ParseError(f"line {line_no}: poly before any component")
            blocks[-1][4].append(line[len("poly"):].strip())
        else:
            raise ParseError(f"line {line_no}: unknown directive {head!r}")
    if field_spec is None:
        raise ParseError("document has no field line")
    if n is None:
        raise ParseError("document has no space line")
    if not blocks:
        raise ParseError("document has no components")
    names = [b[0] for b in blocks]
    if len(set(names)) != len(names):
        raise ParseError("component names must be unique")
    components = tuple(
        _build_component(name, texts, field_spec, n + 1, ddim, ddeg, irred)
        for name, ddim, ddeg, irred, texts in blocks)
    containments = _containment_screen(components)
    has_empty = any(c.empty for c in components)
    if containments or has_empty:
        irredundancy = "violated"
    elif len(components) == 1 or all(c.is_linear for c in components):
        irredundancy = "verified"
    else:
        irredundancy = "unverified"
    return Variety(field_spec, n, components, irredundancy, containments)


def load_variety_file(path) -> Variety:
    with open(path, "r", encoding="utf-8") as fh:
        return load_variety(fh.read())


def _containment_screen(components: tuple) -> tuple:
    """Certified containments X_i inside X_j: every generator of I_j reduces
    to zero against the basis of I_i (an ideal-inclusion certificate)."""
    found = []
    for ci in components:
        if ci.empty:
            continue
        for cj in components:
            if cj is ci or cj.empty:
                continue
            if all(normal_form(g, list(ci.gb.basis), ci.gb.order).is_zero()
                   for g in cj.ideal.gens):
                found.append((ci.name, cj.name))
    return tuple(found)


# --- point counting ---

def _on_some_component(coords, components, zero) -> bool:
    for comp in components:
        if all(g.evaluate(coords) == zero for g in comp.ideal.gens):
            return True
    return False


def rational_points(X: Variety, budget: int = DEFAULT_BUDGET) -> list:
    """All rational points of the union, enumeration order, exact."""
    total = pi(X.n, X.q)
    if total > budget:
        raise BudgetExceededError(
            f"P^{X.n}(F_{X.q}) has {total} points, over budget {budget}")
    zero = X.field.zero()
    return [P for P in enumerate_points(X.n, X.field)
            if _on_some_component(P.coords, X.components, zero)]


def count_points(target: Union[Variety, Ideal],
                 budget: int = DEFAULT_BUDGET) -> PointCount:
    """Exact rational point count by exhaustive enumeration."""
    if isinstance(target, Ideal):
        n = target.nvars - 1
        q = target.field.q
        total = pi(n, q)
        if total > budget:
            raise BudgetExceededError(
                f"P^{n}(F_{q}) has {total} points, over budget {budget}")
        zero = target.field.zero()
        value = sum(
            1 for P in enumerate_points(n, target.field)
            if all(g.evaluate(P.coords) == zero for g in target.gens))
        return PointCount(value, "enumeration", n, q)
    return PointCount(len(rational_points(target, budget)),
                      "enumeration", target.n, target.q)


# --- classification against the spanning hypothesis ---

@dataclass(frozen=True)
class ComponentClass:
    name: str
    dim: int
    degree: int
    is_linear: bool
    hyperplane_status: str  # "contained" | "clear_verified" | "clear_declared" | "unknown"
    witness: Optional[str]  # a containing hyperplane's form, when contained
    method: str


@dataclass(frozen=True)
class Classification:
    components: tuple
    regime: str  # "spanning" | "linear_exceptions" | "general"
    spanning_quality: str  # "verified" | "declared" | "none"

    def to_json_dict(self) -> dict:
        return {
            "regime": self.regime,
            "spanning_quality": self.spanning_quality,
            "components": [
                {"name": c.name, "dim": c.dim, "degree": c.degree,
                 "linear": c.is_linear, "status": c.hyperplane_status,
                 "witness": c.witness, "method": c.method}
                for c in self.components],
        }


def _linear_factor_sweep(f: Polynomial) -> Optional[Polynomial]:
    """A normalized linear form dividing f, or None. Exact: a geometric
    component of a hypersurface lies in a rational hyperplane exactly when
    the form has a rational linear divisor."""
    from .projgeom import _normalized_tuples

    nvars = f.nvars
    for w in _normalized_tuples(f.field, nvars):
        ell = Polynomial.from_terms(f.field, nvars, [
            (tuple(1 if j == i else 0 for j in range(nvars)), c)
            for i, c in enumerate(w)])
        if normal_form(f, [ell], GREVLEX).is_zero():
            return ell
    return None


def classify_components(X: Variety) -> Classification:
    """Per-component hyperplane-containment status and the census regime."""
    out = []
    for comp in X.components:
        if comp.empty:
            out.append(ComponentClass(comp.name, comp.dim, comp.degree,
                                      comp.is_linear, "clear_verified", None,
                                      "empty"))
            continue
        if comp.hyperplane_forms:
            out.append(ComponentClass(
                comp.name, comp.dim, comp.degree, comp.is_linear,
                "contained", str(comp.hyperplane_forms[0]), "degree_one_slice"))
            continue
        if len(comp.ideal.gens) == 1:
            ell = _linear_factor_sweep(comp.ideal.gens[0])
            if ell is not None:
                out.append(ComponentClass(
                    comp.name, comp.dim, comp.degree, comp.is_linear,
                    "contained", str(ell), "linear_factor_sweep"))
            else:
                out.append(ComponentClass(
                    comp.name, comp.dim, comp.degree, comp.is_linear,
                    "clear_verified", None, "linear_factor_sweep"))
            continue
        status = "clear_declared" if comp.irreducible_declared else "unknown"
        out.append(ComponentClass(comp.name, comp.dim, comp.degree,
                                  comp.is_linear, status, None,
                                  "degree_one_slice"))
    contained = [c for c in out if c.hyperplane_status == "contained"]
    unknown = [c for c in out if c.hyperplane_status == "unknown"]
    if not contained and not unknown:
        quality = ("verified" if all(c.hyperplane_status == "clear_verified"
                                     for c in out) else "declared")
        regime = "spanning"
    elif all(c.is_linear for c in contained) and not unknown:
        quality = "none"
        regime = "linear_exceptions"
    else:
        quality = "none"
        regime = "general"
    return Classification(tuple(out), regime, quality)


# --- affine charts ---

@dataclass(frozen=True)
class AffineComponent:
    name: str
    dim: int
    degree: int
    gens: tuple  # affine polynomials in n variables


@dataclass(frozen=True)
class AffineChart:
    """The decomposition of X along a hyperplane: points on H, points off H
    (the affine chart), and per-component affine equations for the parts
    not inside H. Dimensions and degrees persist to the chart."""

    field: FieldSpec
    n: int
    form: Polynomial
    pivot: int
    components_off: tuple
    components_on: tuple  # names of components inside H
    projective_count: int
    section_count: int
    affine_count: int

    def count_affine_by_chart(self, budget: int = DEFAULT_BUDGET) -> int:
        """Independent recount: evaluate the affine equations over F^n."""
        import itertools

        if self.field.q ** self.n > budget:
            raise BudgetExceededError("affine enumeration over budget")
        zero = self.field.zero()
        els = list(self.field.elements())
        count = 0
        for point in itertools.product(els, repeat=self.n):
            for comp in self.components_off:
                if all(g.evaluate(point) == zero for g in comp.gens):
                    count += 1
                    break
        return count


def affine_chart(X: Variety, h, budget: int = DEFAULT_BUDGET) -> AffineChart:
    """Split X along the hyperplane {h = 0}; h is a linear Polynomial or a
    LinearSubspace of dimension n-1."""
    if isinstance(h, LinearSubspace):
        if h.dim != X.n - 1:
            raise ValueError("chart needs a hyperplane, not a smaller subspace")
        form = h.form_polynomials()[0]
    else:
        form = h
    if form.is_zero() or form.degree() != 1 or not form.homogeneous:
        raise ValueError("chart needs a nonzero linear form")
    nvars = X.n + 1
    w = [form.field.zero()] * nvars
    for exps, c in form.terms.items():
        w[exps.index(1)] = c
    pivot = next(i for i, c in enumerate(w) if c)
    inv = w[pivot].inverse()
    # substitution x_j <- row_j(y) with l(x(y)) = y_pivot
    rows = []
    for j in range(nvars):
        if j != pivot:
            rows.append([X.field.one() if m == j else X.field.zero()
                         for m in range(nvars)])
        else:
            row = [-(c * inv) for c in w]
            row[pivot] = inv
            rows.append(row)
    off, on = [], []
    for comp in X.components:
        if normal_form(form, list(comp.gb.basis), comp.gb.order).is_zero():
            on.append(comp.name)
            continue
        affine_gens = tuple(
            chart_transform(g.compose_linear(rows, nvars), pivot, "dehomogenize")
            for g in comp.ideal.gens)
        off.append(AffineComponent(comp.name, comp.dim, comp.degree, affine_gens))
    pts = rational_points(X, budget)
    zero = X.field.zero()
    section = sum(1 for P in pts if form.evaluate(P.coords) == zero)
    return AffineChart(X.field, X.n, form, pivot, tuple(off), tuple(on),
                       len(pts), section, len(pts) - section)


# --- lifting to bound inputs ---

def dimension_degree_sequences(X: Variety):
    """((name, dim, degree) per nonempty component, hypotheses dict)."""
    seq = [(c.name, c.dim, c.degree) for c in X.components if not c.empty]
    hypotheses = {"irredundant": X.irredundancy}
    empties = [c.name for c in X.components if c.empty]
    if empties:
        hypotheses["empty_components"] = ";".join(empties)
    if X.containments:
        hypotheses["containments"] = ";".join(
            f"{a}<{b}" for a, b in X.containments)
    return seq, hypotheses
