"""The line-oriented workspace format.

A workspace file names quivers, algebras, modules, bimodules and decat
inputs.  Matrices are written row per line with exact rational entries
(`p/q`); relation paths list arrow labels in traversal order joined by
dots.  Every object is constructed and validated at parse time, so a
workspace that loads is a workspace whose definitions are all coherent.

Example:

    version 1
    field Q

    quiver kxyQ
      vertex v
      arrow x v v
      arrow y v v
      relation x.x
      relation y.y
      relation x.y
      relation y.x
    end

    algebra A quiver kxyQ
    module AL regular left A
    module AR regular right A
    bimodule RegA regular A
    bimodule AtensA tensor AL AR
"""

from .algebras import Algebra
from .decat import DecatInput
from .errors import BimodlabError, WorkspaceError
from .fields import QQ, GF, FieldError
from .linalg import Matrix
from .modules import (Bimodule, LeftModule, RightModule, direct_sum_bimodules,
                      direct_sum_modules, dual, left_regular,
                      projective_indecomposables, regular_bimodule,
                      right_projective_indecomposables, right_regular,
                      right_simples, simples, tensor_k)
from .quivers import QuiverPresentation

FORMAT_VERSION = 1


class WorkspaceFile:
    """Parsed and validated named definitions over one base field."""

    def __init__(self, field):
        self.field = field
        self.quivers = {}
        self.algebras = {}
        self.modules = {}
        self.bimodules = {}
        self.decat_inputs = {}
        self.records = []  # (kind, name, header_tokens, payload_lines)

    def lookup(self, kind, name):
        table = {"quiver": self.quivers, "algebra": self.algebras,
                 "module": self.modules, "bimodule": self.bimodules,
                 "decat": self.decat_inputs}[kind]
        if name not in table:
            raise WorkspaceError("unknown %s %r" % (kind, name))
        return table[name]


def parse_workspace(text, field=None):
    """Parse workspace text; a field argument overrides a missing field line
    but conflicts with an explicit one."""
    lines = text.splitlines()
    ws = None
    declared_field = None
    version_seen = False
    i = 0
    n = len(lines)

    def strip(line):
        hash_pos = line.find("#")
        return (line if hash_pos < 0 else line[:hash_pos]).rstrip()

    def tokens_of(idx):
        return strip(lines[idx]).split()

    # first pass: version and field lines may appear before any definition
    body_start = 0
    for idx in range(n):
        toks = tokens_of(idx)
        if not toks:
            continue
        if toks[0] == "version":
            if len(toks) != 2 or not toks[1].isdigit():
                raise WorkspaceError("bad version line", idx + 1)
            if int(toks[1]) != FORMAT_VERSION:
                raise WorkspaceError("unsupported format version %s" % toks[1], idx + 1)
            version_seen = True
        elif toks[0] == "field":
            if declared_field is not None:
                raise WorkspaceError("duplicate field line", idx + 1)
            declared_field = _parse_field_tokens(toks[1:], idx + 1)
        else:
            break

    if declared_field is not None and field is not None and declared_field != field:
        raise WorkspaceError("field %r from the command line conflicts with the "
                             "workspace field" % (field,))
    ws = WorkspaceFile(declared_field or field or QQ)

    while i < n:
        toks = tokens_of(i)
        if not toks or toks[0] in ("version", "field"):
            i += 1
            continue
        kind = toks[0]
        try:
            if kind == "quiver":
                i = _parse_quiver(ws, lines, i, strip)
            elif kind == "algebra":
                i = _parse_algebra(ws, lines, i, strip)
            elif kind == "module":
                i = _parse_module(ws, lines, i, strip)
            elif kind == "bimodule":
                i = _parse_bimodule(ws, lines, i, strip)
            elif kind == "decat":
                i = _parse_decat(ws, lines, i, strip)
            else:
                raise WorkspaceError("unknown directive %r" % kind, i + 1,
                                     strip(lines[i]).find(kind) + 1)
        except WorkspaceError:
            raise
        except (BimodlabError, FieldError) as exc:
            raise WorkspaceError(str(exc), i + 1)
    return ws


def _parse_field_tokens(toks, lineno):
    if toks == ["Q"]:
        return QQ
    if len(toks) == 2 and toks[0] == "Fp":
        try:
            return GF(int(toks[1]))
        except (ValueError, FieldError) as exc:
            raise WorkspaceError(str(exc), lineno)
    if len(toks) == 1 and toks[0].startswith("Fp:"):
        try:
            return GF(int(toks[0][3:]))
        except (ValueError, FieldError) as exc:
            raise WorkspaceError(str(exc), lineno)
    raise WorkspaceError("bad field spec %r (expected Q or Fp <p>)" % " ".join(toks),
                         lineno)


def _fresh_name(ws, name, lineno):
    for table in (ws.quivers, ws.algebras, ws.modules, ws.bimodules,
                  ws.decat_inputs):
        if name in table:
            raise WorkspaceError("duplicate name %r" % name, lineno)


def _block(lines, start, strip):
    """Collect payload lines of an indented block closed by 'end'."""
    payload = []
    i = start + 1
    while i < len(lines):
        content = strip(lines[i])
        if content.strip() == "end":
            return payload, i + 1
        if content.strip():
            payload.append((i + 1, content.strip()))
        i += 1
    raise WorkspaceError("unterminated block", start + 1)


def _parse_rational(field, token, lineno):
    try:
        return field.parse(token)
    except FieldError as exc:
        raise WorkspaceError(str(exc), lineno)


def _parse_row(field, text, lineno, expect=None):
    toks = text.split()
    if expect is not None and len(toks) != expect:
        raise WorkspaceError("expected %d entries, got %d" % (expect, len(toks)),
                             lineno)
    return [_parse_rational(field, t, lineno) for t in toks]


def _looks_like_scalar(token):
    t = token.lstrip("+-")
    return bool(t) and all(c.isdigit() or c == "/" for c in t)


def _parse_relation(field, text, lineno):
    toks = text.split()
    terms = []
    sign = field.one
    coeff = None
    idx = 0
    while idx < len(toks):
        t = toks[idx]
        if t == "+":
            sign, coeff = field.one, None
        elif t == "-":
            sign, coeff = -field.one, None
        elif _looks_like_scalar(t):
            if coeff is not None:
                raise WorkspaceError("two coefficients in a row", lineno)
            coeff = _parse_rational(field, t, lineno)
        else:
            path = tuple(t.split("."))
            if any(not p for p in path):
                raise WorkspaceError("malformed path %r" % t, lineno)
            c = sign if coeff is None else sign * coeff
            terms.append((c, path))
            sign, coeff = field.one, None
        idx += 1
    if coeff is not None:
        raise WorkspaceError("dangling coefficient", lineno)
    if not terms:
        raise WorkspaceError("empty relation", lineno)
    return terms


def _parse_quiver(ws, lines, i, strip):
    header = strip(lines[i]).split()
    if len(header) != 2:
        raise WorkspaceError("quiver header needs a name", i + 1)
    name = header[1]
    _fresh_name(ws, name, i + 1)
    payload, nxt = _block(lines, i, strip)
    vertices, arrows, relations = [], [], []
    for lineno, content in payload:
        toks = content.split()
        if toks[0] == "vertex" and len(toks) == 2:
            vertices.append(toks[1])
        elif toks[0] == "arrow" and len(toks) == 4:
            arrows.append((toks[1], toks[2], toks[3]))
        elif toks[0] == "relation":
            relations.append((lineno, content[len("relation"):].strip()))
        else:
            raise WorkspaceError("bad quiver line %r" % content, lineno)
    rels = [_parse_relation(ws.field, text, lineno) for lineno, text in relations]
    try:
        q = QuiverPresentation(ws.field, vertices, arrows, rels)
    except BimodlabError as exc:
        at = relations[0][0] if relations else i + 1
        raise WorkspaceError(str(exc), at)
    ws.quivers[name] = q
    ws.records.append(("quiver", name, header, payload))
    return nxt


def _parse_algebra(ws, lines, i, strip):
    header = strip(lines[i]).split()
    if len(header) < 3:
        raise WorkspaceError("algebra header: algebra <name> quiver|table ...", i + 1)
    name, how = header[1], header[2]
    _fresh_name(ws, name, i + 1)
    if how == "quiver":
        if len(header) != 4:
            raise WorkspaceError("algebra <name> quiver <quiverName>", i + 1)
        q = ws.lookup("quiver", header[3])
        try:
            ws.algebras[name] = Algebra.from_quiver(q)
        except BimodlabError as exc:
            raise WorkspaceError(str(exc), i + 1)
        ws.records.append(("algebra", name, header, []))
        return i + 1
    if how == "table":
        payload, nxt = _block(lines, i, strip)
        dim, labels, unit = None, None, None
        muls = {}
        for lineno, content in payload:
            toks = content.split()
            if toks[0] == "dim" and len(toks) == 2:
                dim = int(toks[1])
            elif toks[0] == "labels":
                labels = toks[1:]
            elif toks[0] == "unit":
                unit = _parse_row(ws.field, content[len("unit"):], lineno, dim)
            elif toks[0] == "mul" and len(toks) >= 3:
                a, b = int(toks[1]), int(toks[2])
                muls[(a, b)] = _parse_row(ws.field,
                                          " ".join(toks[3:]), lineno, dim)
            else:
                raise WorkspaceError("bad table line %r" % content, lineno)
        if dim is None or unit is None:
            raise WorkspaceError("table needs dim and unit", i + 1)
        zero = [ws.field.zero] * dim
        table = [[muls.get((a, b), zero) for b in range(dim)] for a in range(dim)]
        try:
            ws.algebras[name] = Algebra.from_structure_constants(
                ws.field, table, unit, labels)
        except BimodlabError as exc:
            raise WorkspaceError(str(exc), i + 1)
        ws.records.append(("algebra", name, header, payload))
        return nxt
    raise WorkspaceError("unknown algebra form %r" % how, i + 1)


def _parse_module(ws, lines, i, strip):
    header = strip(lines[i]).split()
    if len(header) < 3:
        raise WorkspaceError("module header too short", i + 1)
    name, how = header[1], header[2]
    _fresh_name(ws, name, i + 1)
    if how == "explicit":
        if len(header) != 5 or header[3] not in ("left", "right"):
            raise WorkspaceError("module <name> explicit <left|right> <algebra>", i + 1)
        side, alg = header[3], ws.lookup("algebra", header[4])
        payload, nxt = _block(lines, i, strip)
        dim, actions = None, {}
        rows_needed, current, rows = 0, None, []
        for lineno, content in payload:
            toks = content.split()
            if toks[0] == "dim" and len(toks) == 2:
                dim = int(toks[1])
            elif toks[0] == "action" and len(toks) == 2:
                if current is not None and rows_needed:
                    raise WorkspaceError("previous action matrix incomplete", lineno)
                current, rows, rows_needed = int(toks[1]), [], dim
            elif current is not None:
                rows.append(_parse_row(ws.field, content, lineno, dim))
                rows_needed -= 1
                if rows_needed == 0:
                    actions[current] = Matrix(ws.field, rows, dim)
                    current = None
            else:
                raise WorkspaceError("bad module line %r" % content, lineno)
        if dim is None:
            raise WorkspaceError("module needs dim", i + 1)
        missing = [t for t in range(alg.dim) if t not in actions]
        if missing:
            raise WorkspaceError("missing action matrices for basis indices %r"
                                 % missing, i + 1)
        cls = LeftModule if side == "left" else RightModule
        try:
            mod = cls(alg, [actions[t] for t in range(alg.dim)], label=name)
        except BimodlabError as exc:
            raise WorkspaceError(str(exc), i + 1)
        ws.modules[name] = mod
        ws.records.append(("module", name, header, payload))
        return nxt
    # constructions on one line
    try:
        mod = _module_construction(ws, how, header, i + 1)
    except BimodlabError as exc:
        raise WorkspaceError(str(exc), i + 1)
    mod.label = name
    ws.modules[name] = mod
    ws.records.append(("module", name, header, []))
    return i + 1


def _module_construction(ws, how, header, lineno):
    if how == "regular":
        side, alg = header[3], ws.lookup("algebra", header[4])
        return left_regular(alg) if side == "left" else right_regular(alg)
    if how == "projective":
        side, alg, idx = header[3], ws.lookup("algebra", header[4]), int(header[5])
        mods = (projective_indecomposables(alg) if side == "left"
                else right_projective_indecomposables(alg))
        if not 0 <= idx < len(mods):
            raise WorkspaceError("projective index out of range", lineno)
        return mods[idx]
    if how == "simple":
        side, alg, idx = header[3], ws.lookup("algebra", header[4]), int(header[5])
        mods = simples(alg) if side == "left" else right_simples(alg)
        if not 0 <= idx < len(mods):
            raise WorkspaceError("simple index out of range", lineno)
        return mods[idx]
    if how == "dual":
        return dual(ws.lookup("module", header[3]))
    if how == "sum":
        parts = [ws.lookup("module", t) for t in header[3:]]
        if not parts:
            raise WorkspaceError("empty sum", lineno)
        return direct_sum_modules(parts)
    raise WorkspaceError("unknown module form %r" % how, lineno)


def _parse_bimodule(ws, lines, i, strip):
    header = strip(lines[i]).split()
    if len(header) < 3:
        raise WorkspaceError("bimodule header too short", i + 1)
    name, how = header[1], header[2]
    _fresh_name(ws, name, i + 1)
    if how == "explicit":
        if len(header) != 5:
            raise WorkspaceError("bimodule <name> explicit <algA> <algB>", i + 1)
        a, b = ws.lookup("algebra", header[3]), ws.lookup("algebra", header[4])
        payload, nxt = _block(lines, i, strip)
        dim = None
        left_actions, right_actions = {}, {}
        side, current, rows, rows_needed = None, None, [], 0
        for lineno, content in payload:
            toks = content.split()
            if toks[0] == "dim" and len(toks) == 2:
                dim = int(toks[1])
            elif toks[0] in ("left", "right") and len(toks) == 2:
                if current is not None and rows_needed:
                    raise WorkspaceError("previous action matrix incomplete", lineno)
                side, current, rows, rows_needed = toks[0], int(toks[1]), [], dim
            elif current is not None:
                rows.append(_parse_row(ws.field, content, lineno, dim))
                rows_needed -= 1
                if rows_needed == 0:
                    target = left_actions if side == "left" else right_actions
                    target[current] = Matrix(ws.field, rows, dim)
                    current = None
            else:
                raise WorkspaceError("bad bimodule line %r" % content, lineno)
        if dim is None:
            raise WorkspaceError("bimodule needs dim", i + 1)
        for label, table, expected in (("left", left_actions, a.dim),
                                       ("right", right_actions, b.dim)):
            missing = [t for t in range(expected) if t not in table]
            if missing:
                raise WorkspaceError("missing %s action matrices %r" % (label, missing),
                                     i + 1)
        try:
            bim = Bimodule(a, b, [left_actions[t] for t in range(a.dim)],
                           [right_actions[t] for t in range(b.dim)], label=name)
        except BimodlabError as exc:
            raise WorkspaceError(str(exc), i + 1)
        ws.bimodules[name] = bim
        ws.records.append(("bimodule", name, header, payload))
        return nxt
    try:
        bim = _bimodule_construction(ws, how, header, i + 1)
    except BimodlabError as exc:
        raise WorkspaceError(str(exc), i + 1)
    bim.label = name
    ws.bimodules[name] = bim
    ws.records.append(("bimodule", name, header, []))
    return i + 1


def _bimodule_construction(ws, how, header, lineno):
    if how == "regular":
        return regular_bimodule(ws.lookup("algebra", header[3]))
    if how == "tensor":
        p = ws.lookup("module", header[3])
        q = ws.lookup("module", header[4])
        if not isinstance(p, LeftModule) or isinstance(p, RightModule):
            raise WorkspaceError("first tensor factor must be a left module", lineno)
        if not isinstance(q, RightModule):
            raise WorkspaceError("second tensor factor must be a right module", lineno)
        return tensor_k(p, q)
    if how == "dual":
        return dual(ws.lookup("bimodule", header[3]))
    if how == "sum":
        parts = [ws.lookup("bimodule", t) for t in header[3:]]
        if not parts:
            raise WorkspaceError("empty sum", lineno)
        return direct_sum_bimodules(parts)
    raise WorkspaceError("unknown bimodule form %r" % how, lineno)


def _parse_decat(ws, lines, i, strip):
    header = strip(lines[i]).split()
    if len(header) < 4:
        raise WorkspaceError("decat <name> <algebra> <module...>", i + 1)
    name = header[1]
    _fresh_name(ws, name, i + 1)
    alg = ws.lookup("algebra", header[2])
    mods = [ws.lookup("module", t) for t in header[3:]]
    try:
        ws.decat_inputs[name] = DecatInput(alg, mods)
    except BimodlabError as exc:
        raise WorkspaceError(str(exc), i + 1)
    ws.records.append(("decat", name, header, []))
    return i + 1


def render_workspace(ws):
    """Normalized text for a parsed workspace; parsing the output gives the
    same workspace and rendering is idempotent after this pass."""
    out = ["version %d" % FORMAT_VERSION]
    if ws.field == QQ:
        out.append("field Q")
    else:
        out.append("field Fp %d" % ws.field.p)
    for kind, name, header, payload in ws.records:
        out.append("")
        out.append(" ".join(header))
        if payload:
            for _, content in payload:
                out.append("  " + " ".join(content.split()))
            out.append("end")
    return "\n".join(out) + "\n"
