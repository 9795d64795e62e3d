import pytest

from bracketc import (Atom, HornProgram, HornRule, Statement, Var,
                      parse_program, parse_statement)

SIBLING_NAMES = ("SALLY", "ERICA", "JAMES", "POLY")


@pytest.fixture
def girls_ponies():
    return parse_program("""GIRL LINDA
GIRL MARY
[GIRL] LIKES PONIES""")


@pytest.fixture
def same_content_program():
    return parse_program("A [B][B]\nB C\nB D")


@pytest.fixture
def guard_program():
    return parse_program("""NAME MARY
MARY IS A GIRL
NAME TOM
TOM IS A BOY
[NAME] LIKES PONIES [[NAME] IS A GIRL]""")


@pytest.fixture
def not_program():
    return parse_program("""TOM IS A GIRL , NOT !
MARY IS A GIRL
NAME MARY
NAME TOM
[NAME] LIKES PONIES [[NAME] IS A GIRL]""")


@pytest.fixture
def empty_bracket_program():
    return parse_program("A [] [[] C]\nB")


@pytest.fixture
def sibling_horn():
    facts = tuple(Atom("FATHER_CHILD", ("TOM", name)) for name in SIBLING_NAMES)
    rule = HornRule(
        Atom("SIBLING", (Var("X"), Var("Y"))),
        (Atom("FATHER_CHILD", ("TOM", Var("X"))),
         Atom("FATHER_CHILD", ("TOM", Var("Y")))))
    return HornProgram(facts, (rule,))


@pytest.fixture
def sibling_corpus():
    """4 facts + 12 distinct-pair sibling statements (no self-pairs)."""
    facts = [Statement(("FATHER_CHILD", "TOM", n)) for n in SIBLING_NAMES]
    pairs = [Statement(("SIBLING", a, b))
             for a in SIBLING_NAMES for b in SIBLING_NAMES if a != b]
    return facts + pairs


@pytest.fixture
def addition_program():
    lines = [f"AFTER {n} IS {n + 1}" for n in range(10)]
    lines += [
        "NUMBER 0",
        "NUMBER [AFTER [NUMBER] IS]",
        "BEFORE [NUMBER] IS [ANOTHER NUMBER]"
        " [AFTER [ANOTHER NUMBER] IS [NUMBER]]",
        "ANOTHER NUMBER [NUMBER]",
        "[NUMBER] + 0 = [NUMBER]",
        "[NUMBER] + [ANOTHER NUMBER]"
        " [[AFTER [NUMBER] IS] + [BEFORE [ANOTHER NUMBER] IS]]",
    ]
    return parse_program("\n".join(lines))


@pytest.fixture
def templated_corpus():
    """12 sentences over two 6-variant templates."""
    names = ["SALLY", "ERICA", "JAMES", "POLY", "ANNA", "BELLA"]
    return [parse_statement(f"TOM IS {n} 'S FATHER") for n in names] + \
           [parse_statement(f"{n} LIKES BIG PONIES") for n in names]
