"""Encoders: context-free grammars and Horn fact/rule sets into programs.

A production N -> alpha becomes the statement "N -> ..." where every
nonterminal occurrence turns into the bracket [X ->].  Repeated
nonterminals within one right side would collide under the same-content
rule, so repeats are numbered (X1, X2, ...) with alias statements
"X1 -> [X ->]" that let each occurrence vary independently.

Horn facts render predicate-first ("P a b"); rule variables are supplied
by binder brackets whose content is the atom rendering up to the variable
position.  Two variables sharing a binder content get the alias device
("FC2 [FATHER_CHILD TOM]") so they can vary independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import ReservedSymbolClash, UnsupportedRule
from .syntax import Bracket, Element, Program, Statement

ARROW = "->"


# ---------------------------------------------------------------------------
# Context-free grammars


@dataclass(frozen=True)
class CFG:
    nonterminals: frozenset[str]
    terminals: frozenset[str]
    start: str
    productions: tuple[tuple[str, tuple[str, ...]], ...]

    def __post_init__(self) -> None:
        if self.start not in self.nonterminals:
            raise ValueError(f"start symbol {self.start!r} is not a nonterminal")
        if self.nonterminals & self.terminals:
            raise ValueError("terminals and nonterminals overlap")
        for lhs, rhs in self.productions:
            if lhs not in self.nonterminals:
                raise ValueError(f"undeclared nonterminal {lhs!r}")
            for sym in rhs:
                if sym not in self.nonterminals and sym not in self.terminals:
                    raise ValueError(f"undeclared symbol {sym!r}")


def parse_cfg(text: str) -> CFG:
    """Lines "N -> a B | eps"; the first left-hand side is the start."""
    productions: list[tuple[str, tuple[str, ...]]] = []
    nonterminals: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "->" not in stripped:
            raise ValueError(f"grammar line without '->': {stripped!r}")
        lhs, rhs_text = stripped.split("->", 1)
        lhs = lhs.strip()
        if not lhs:
            raise ValueError(f"missing left-hand side: {stripped!r}")
        if lhs not in nonterminals:
            nonterminals.append(lhs)
        for alt in rhs_text.split("|"):
            symbols = tuple(alt.split())
            if symbols == ("eps",):
                symbols = ()
            productions.append((lhs, symbols))
    if not productions:
        raise ValueError("grammar has no productions")
    nts = frozenset(nonterminals)
    terminals = frozenset(
        sym for _, rhs in productions for sym in rhs if sym not in nts)
    return CFG(nts, terminals, nonterminals[0], tuple(productions))


def cfg_to_bc(g: CFG) -> Program:
    """Simulate a CFG: one statement per production plus alias statements."""
    statements: list[Statement] = []
    aliases: dict[str, str] = {}  # alias word -> base nonterminal
    vocab = g.nonterminals | g.terminals
    for lhs, rhs in g.productions:
        counts: dict[str, int] = {}
        elements: list[Element] = [lhs, ARROW]
        for sym in rhs:
            if sym in g.terminals:
                elements.append(sym)
                continue
            counts[sym] = counts.get(sym, 0) + 1
            occurrence = counts[sym]
            if occurrence == 1:
                elements.append(Bracket((sym, ARROW)))
            else:
                alias = f"{sym}{occurrence - 1}"
                if alias in vocab:
                    raise ReservedSymbolClash(
                        f"alias {alias!r} collides with a grammar symbol")
                aliases.setdefault(alias, sym)
                elements.append(Bracket((alias, ARROW)))
        statements.append(Statement(tuple(elements)))
    for alias, base in aliases.items():
        statements.append(Statement((alias, ARROW, Bracket((base, ARROW)))))
    return Program(statements)


def cfg_enumerate(g: CFG, max_len: int) -> frozenset[tuple[str, ...]]:
    """Exact set of terminal strings of length <= max_len from the start.

    Bottom-up fixpoint over per-nonterminal languages; partial
    concatenations beyond max_len are pruned, so loops, unit chains and
    epsilon productions all terminate.
    """
    lang: dict[str, set[tuple[str, ...]]] = {nt: set() for nt in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions:
            partials: set[tuple[str, ...]] = {()}
            for sym in rhs:
                options: Iterable[tuple[str, ...]]
                if sym in g.terminals:
                    options = [(sym,)]
                else:
                    options = lang[sym]
                partials = {p + o for p in partials for o in options
                            if len(p) + len(o) <= max_len}
                if not partials:
                    break
            for s in partials:
                if s not in lang[lhs]:
                    lang[lhs].add(s)
                    changed = True
    return frozenset(lang[g.start])


def cfg_strings_from_closure(bracket_free: Iterable[Statement], start: str,
                             max_len: int) -> frozenset[tuple[str, ...]]:
    """Strip the "S ->" prefix from derived statements to recover strings."""
    out = set()
    for st in bracket_free:
        ws = st.words
        if len(ws) >= 2 and ws[0] == start and ws[1] == ARROW:
            body = ws[2:]
            if len(body) <= max_len:
                out.add(body)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Horn fact/rule sets


@dataclass(frozen=True)
class Var:
    name: str


Term = Union[str, Var]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()

    def variables(self) -> list[Var]:
        return [a for a in self.args if isinstance(a, Var)]


@dataclass(frozen=True)
class HornRule:
    head: Atom
    body: tuple[Atom, ...]


@dataclass(frozen=True)
class HornProgram:
    facts: tuple[Atom, ...] = ()
    rules: tuple[HornRule, ...] = ()

    def vocabulary(self) -> set[str]:
        vocab: set[str] = set()
        for atom in list(self.facts) + [a for r in self.rules
                                        for a in (r.head, *r.body)]:
            vocab.add(atom.pred)
            for arg in atom.args:
                if isinstance(arg, str):
                    vocab.add(arg)
        return vocab


def _parse_atom(text: str) -> Atom:
    text = text.strip()
    if "(" not in text:
        if not text:
            raise ValueError("empty atom")
        return Atom(text)
    if not text.endswith(")"):
        raise ValueError(f"malformed atom: {text!r}")
    pred, inner = text[:-1].split("(", 1)
    pred = pred.strip()
    args: list[Term] = []
    for part in inner.split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty argument in atom: {text!r}")
        args.append(Var(part) if part[0].isupper() else part)
    return Atom(pred, tuple(args))


def parse_horn(text: str) -> HornProgram:
    """Lines "p(a,b)." for facts, "h(X) :- b1(X), b2(X,Y)." for rules.

    Prolog convention: identifiers starting with an uppercase letter are
    variables, everything else is a constant.
    """
    facts: list[Atom] = []
    rules: list[HornRule] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#") or stripped.startswith("%"):
            continue
        if stripped.endswith("."):
            stripped = stripped[:-1].strip()
        if ":-" in stripped:
            head_text, body_text = stripped.split(":-", 1)
            head = _parse_atom(head_text)
            body = tuple(_parse_atom(a) for a in _split_atoms(body_text))
            rules.append(HornRule(head, body))
        else:
            atom = _parse_atom(stripped)
            if atom.variables():
                raise ValueError(f"fact with variables: {stripped!r}")
            facts.append(atom)
    return HornProgram(tuple(facts), tuple(rules))


def _split_atoms(text: str) -> list[str]:
    """Split a rule body on commas outside parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if current:
        parts.append("".join(current))
    return [p for p in parts if p.strip()]


def _alias_word(pred: str, index: int, forbidden: set[str]) -> str:
    parts = pred.split("_")
    base = "".join(p[0] for p in parts if p) if len(parts) > 1 else pred
    k = index
    while f"{base}{k}" in forbidden:
        k += 1
    return f"{base}{k}"


@dataclass
class _RuleContext:
    binders: dict[Var, Bracket] = field(default_factory=dict)
    content_owner: dict[tuple[Element, ...], Var] = field(default_factory=dict)
    alias_statements: list[Statement] = field(default_factory=list)


def horn_to_bc(h: HornProgram) -> Program:
    """Render facts and rules as statements; prefix-recoverable rules only.

    A body atom binds its final argument when that argument is a new
    variable and every earlier argument is a constant or an already-bound
    variable; anything else raises UnsupportedRule.
    """
    statements: list[Statement] = []
    vocab = h.vocabulary()
    used_aliases: set[str] = set()

    for fact in h.facts:
        statements.append(Statement((fact.pred, *fact.args)))  # type: ignore[arg-type]

    for rule in h.rules:
        ctx = _RuleContext()
        guards: list[Bracket] = []
        for atom in rule.body:
            new_vars = [v for v in atom.variables() if v not in ctx.binders]
            if not new_vars:
                guards.append(Bracket(_render_args((atom.pred, *atom.args), ctx)))
                continue
            if len(new_vars) > 1 or atom.args[-1] != new_vars[0]:
                raise UnsupportedRule(
                    f"cannot recover variables of {atom.pred!r} as an ending")
            var = new_vars[0]
            content = _render_args((atom.pred, *atom.args[:-1]), ctx)
            if content in ctx.content_owner and ctx.content_owner[content] != var:
                alias = _alias_word(atom.pred, 2, vocab | used_aliases)
                used_aliases.add(alias)
                ctx.alias_statements.append(
                    Statement((alias, Bracket(content))))
                content = (alias,)
            ctx.content_owner.setdefault(content, var)
            ctx.binders[var] = Bracket(content)
        for var in rule.head.variables():
            if var not in ctx.binders:
                raise UnsupportedRule(
                    f"head variable {var.name!r} is not bound by the body")
        head_elements = _render_args((rule.head.pred, *rule.head.args), ctx)
        statements.extend(ctx.alias_statements)
        statements.append(Statement(head_elements + tuple(guards)))

    return Program(statements)


def _render_args(parts: tuple[Term, ...], ctx: _RuleContext) -> tuple[Element, ...]:
    rendered: list[Element] = []
    for part in parts:
        if isinstance(part, Var):
            if part not in ctx.binders:
                raise UnsupportedRule(
                    f"variable {part.name!r} used before it is bound")
            rendered.append(ctx.binders[part])
        else:
            rendered.append(part)
    return tuple(rendered)
