"""Command-line surface for the package.

Every value-producing command accepts words in either textual form
(compact extended digits like ``24213`` or ``10652438ba97``, or
comma/space-separated integers) and offers ``--json`` for structured
output.  Positions on the command line and in output are 0-based.

Exit codes: 0 for success or a true verdict, 1 for a false verdict
(pattern absent, not separable, not a supersequence), 2 for usage or
validation errors, and 3 when a verification sweep finds a soundness
violation.
"""

from __future__ import annotations

import json
import sys

import click

from . import exchange as exchange_mod
from . import greene as greene_mod
from . import patterns, supersequence
from .rsk import rsk as rsk_of, shape_of
from .core import IndexedSubsequence, ParseError, Permutation, Word
from .render import render_ferrers, render_tableau

EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


class WordParam(click.ParamType):
    name = "word"

    def convert(self, value, param, ctx):
        if isinstance(value, Word):
            return value
        try:
            return Word.parse(value)
        except ParseError as exc:
            self.fail(str(exc), param, ctx)


class PermParam(click.ParamType):
    name = "permutation"

    def convert(self, value, param, ctx):
        if isinstance(value, Permutation):
            return value
        try:
            return Permutation.parse(value)
        except (ParseError, ValueError) as exc:
            self.fail(str(exc), param, ctx)


class PositionsParam(click.ParamType):
    name = "positions"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        value = value.strip()
        if not value:
            return ()
        try:
            return tuple(sorted(int(t) for t in value.replace(",", " ").split()))
        except ValueError:
            self.fail(f"positions must be integers, got {value!r}", param, ctx)


WORD = WordParam()
PERM = PermParam()
POSITIONS = PositionsParam()


def _emit(data: dict, as_json: bool, human: str) -> None:
    if as_json:
        click.echo(json.dumps(data))
    else:
        click.echo(human)


def _display_letters(perm: Permutation, positions) -> str:
    sub = IndexedSubsequence(perm.word, tuple(positions))
    return str(Word(perm.display_letters(sub)))


@click.group()
def main() -> None:
    """Shapes of words, separable patterns, and supersequence bounds."""


@main.command("rsk")
@click.argument("word", type=WORD)
@click.option("--json", "as_json", is_flag=True, help="structured output")
def rsk_cmd(word: Word, as_json: bool) -> None:
    """Insertion and recording tableaux of WORD, with their shape."""
    pair = rsk_of(word)
    data = {
        "word": list(word.letters),
        "p": [list(r) for r in pair.p.rows],
        "q": [list(r) for r in pair.q.rows],
        "shape": list(pair.shape.parts),
    }
    human = "P:\n{}\nQ:\n{}\nshape: {}".format(
        render_tableau(pair.p), render_tableau(pair.q), pair.shape
    )
    _emit(data, as_json, human)


@main.command("shape")
@click.argument("word", type=WORD)
@click.option("--json", "as_json", is_flag=True)
def shape_cmd(word: Word, as_json: bool) -> None:
    """Partition shape of WORD under row insertion."""
    shape = shape_of(word)
    _emit({"word": list(word.letters), "shape": list(shape.parts)}, as_json, str(shape))


@main.command("pattern")
@click.argument("word", type=WORD)
@click.argument("pattern", type=PERM)
@click.option("--json", "as_json", is_flag=True)
def pattern_cmd(word: Word, pattern: Permutation, as_json: bool) -> None:
    """Find an occurrence of PATTERN in WORD (exit 1 if it avoids)."""
    witness = patterns.contains_pattern(word, pattern)
    if witness is None:
        _emit(
            {"word": list(word.letters), "pattern": list(pattern.values), "contains": False},
            as_json,
            "avoids",
        )
        sys.exit(EXIT_FALSE)
    _emit(
        {
            "word": list(word.letters),
            "pattern": list(pattern.values),
            "contains": True,
            "positions": list(witness),
        },
        as_json,
        "positions: " + " ".join(str(i) for i in witness),
    )


@main.command("separable")
@click.argument("perm", type=PERM)
@click.option("--json", "as_json", is_flag=True)
def separable_cmd(perm: Permutation, as_json: bool) -> None:
    """Test separability of PERM (exit 1 with an occurrence if not)."""
    if patterns.is_separable(perm):
        _emit({"permutation": list(perm.values), "separable": True}, as_json, "yes")
        return
    for forbidden in ("2413", "3142"):
        occ = patterns.contains_pattern(perm.word, Permutation.parse(forbidden))
        if occ is not None:
            _emit(
                {
                    "permutation": list(perm.values),
                    "separable": False,
                    "pattern": forbidden,
                    "positions": list(occ),
                },
                as_json,
                f"no: contains {forbidden} at positions " + " ".join(str(i) for i in occ),
            )
            sys.exit(EXIT_FALSE)
    raise AssertionError("non-separable permutation without an occurrence")


@main.command("greene")
@click.argument("word", type=WORD)
@click.argument("d", type=int)
@click.option("--json", "as_json", is_flag=True)
def greene_cmd(word: Word, d: int, as_json: bool) -> None:
    """Maximum total size of D disjoint weakly increasing subsequences."""
    try:
        total = greene_mod.greene_sum(word, d)
        family = greene_mod.max_family(word, d) if d >= 1 else None
    except ValueError as exc:
        raise click.UsageError(str(exc))
    members = [list(m.values) for m in family.members] if family else []
    human_members = "\n".join(
        "member {}: {}".format(i + 1, " ".join(str(v) for v in m)) for i, m in enumerate(members)
    )
    _emit(
        {"word": list(word.letters), "d": d, "maximum": total, "members": members},
        as_json,
        f"maximum: {total}" + ("\n" + human_members if human_members else ""),
    )


@main.command("exchange")
@click.argument("perm", type=PERM)
@click.option("--u", "u_pos", type=POSITIONS, required=True, help="positions of u (0-based)")
@click.option("--w", "w_pos", type=POSITIONS, required=True, help="positions of w")
@click.option("--w2", "w2_pos", type=POSITIONS, required=True, help="positions of w'")
@click.option("--json", "as_json", is_flag=True)
def exchange_cmd(perm: Permutation, u_pos, w_pos, w2_pos, as_json: bool) -> None:
    """Exchange disjoint increasing subsequences W, W2 of PERM around U."""
    host = perm.word
    try:
        result = exchange_mod.exchange_pair(
            perm,
            IndexedSubsequence(host, u_pos),
            IndexedSubsequence(host, w_pos),
            IndexedSubsequence(host, w2_pos),
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))
    data = {
        "permutation": list(perm.values),
        "alpha": {"positions": list(result.alpha.positions), "letters": list(perm.display_letters(result.alpha))},
        "beta": {"positions": list(result.beta.positions), "letters": list(perm.display_letters(result.beta))},
    }
    human = "alpha: {} (positions {})\nbeta:  {} (positions {})".format(
        _display_letters(perm, result.alpha.positions),
        " ".join(map(str, result.alpha.positions)),
        _display_letters(perm, result.beta.positions),
        " ".join(map(str, result.beta.positions)),
    )
    _emit(data, as_json, human)


@main.command("witness")
@click.argument("perm", type=PERM)
@click.option("-d", "d", type=int, default=None, help="family size (default: number of shape parts)")
@click.option("--json", "as_json", is_flag=True)
def witness_cmd(perm: Permutation, d, as_json: bool) -> None:
    """Disjoint increasing subsequences of PERM with lengths exactly its shape."""
    shape = shape_of(perm)
    if d is None:
        d = max(len(shape.parts), 1)
    try:
        family = exchange_mod.greene_witness(perm, d)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    members = [
        {"positions": list(m.positions), "letters": list(perm.display_letters(m))}
        for m in family.members
    ]
    human = "shape: {}\n".format(shape) + "\n".join(
        "u{}: {}".format(i + 1, _display_letters(perm, m.positions))
        for i, m in enumerate(family.members)
    )
    _emit(
        {"permutation": list(perm.values), "shape": list(shape.parts), "members": members},
        as_json,
        human,
    )


@main.command("verify-theorem")
@click.option("--sigma-len", type=int, required=True, help="length of separable patterns")
@click.option("--word-alphabet", type=int, default=None, help="letters 1..A for the word space")
@click.option("--word-len", type=int, required=True, help="word length")
@click.option("--word-perms", is_flag=True, help="sweep permutations of length WORD_LEN instead")
@click.option("--sample", type=int, default=None, help="random sample size instead of exhaustion")
@click.option("--seed", type=int, default=None, help="seed for --sample")
@click.option("--jobs", type=int, default=None, help="worker processes (default: machine parallelism)")
@click.option("--json", "as_json", is_flag=True)
def verify_theorem_cmd(sigma_len, word_alphabet, word_len, word_perms, sample, seed, jobs, as_json):
    """Sweep shape containment over separable patterns x words (exit 3 on violation)."""
    try:
        report = exchange_mod.theorem_sweep(
            sigma_len,
            word_len,
            word_alphabet=word_alphabet,
            words_from_permutations=word_perms,
            sample=sample,
            seed=seed,
            jobs=jobs,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))
    data = {
        "instances": report.instance_count,
        "violations": [
            {"word": list(v.word.letters), "sigma": list(v.sigma.values)}
            for v in report.violations
        ],
        "violation_count": report.violation_count,
        "elapsed": report.elapsed,
    }
    human = "instances: {}\nviolations: {}\nelapsed: {:.2f}s".format(
        report.instance_count, report.violation_count, report.elapsed
    )
    _emit(data, as_json, human)
    if not report.passed:
        sys.exit(EXIT_VIOLATION)


@main.command("scs")
@click.argument("perms", type=PERM, nargs=-1, required=True)
@click.option("--budget", type=int, default=supersequence.DEFAULT_STATE_BUDGET, help="state budget")
@click.option("--json", "as_json", is_flag=True)
def scs_cmd(perms, budget: int, as_json: bool) -> None:
    """Shortest common supersequence of PERMS with the shape lower bound."""
    try:
        result = supersequence.scs_exact(supersequence.PermutationSet(tuple(perms)), budget=budget)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    data = {
        "length": result.length,
        "witness": list(result.witness.letters),
        "lower_bound": result.lower_bound,
        "tight": result.bound_tight,
        "members": [list(p.values) for p in perms],
    }
    human = "length: {}\nwitness: {}\nlower bound: {}\ntight: {}".format(
        result.length,
        result.witness,
        "n/a (non-separable member)" if result.lower_bound is None else result.lower_bound,
        result.bound_tight,
    )
    _emit(data, as_json, human)


@main.command("supersequence-check")
@click.argument("word", type=WORD)
@click.argument("perm", type=PERM)
@click.option("--json", "as_json", is_flag=True)
def supersequence_check_cmd(word: Word, perm: Permutation, as_json: bool) -> None:
    """Whether WORD contains PERM as a value-exact subsequence (exit 1 if not)."""
    ok = supersequence.is_supersequence(word, perm)
    _emit(
        {"word": list(word.letters), "permutation": list(perm.values), "supersequence": ok},
        as_json,
        "yes" if ok else "no",
    )
    if not ok:
        sys.exit(EXIT_FALSE)


@main.command("mu")
@click.argument("n", type=int)
@click.option("--json", "as_json", is_flag=True)
def mu_cmd(n: int, as_json: bool) -> None:
    """Union of all Ferrers diagrams of size N, its statistics, and a
    separable family realizing it."""
    try:
        diagram = supersequence.union_diagram(n)
        size = supersequence.union_diagram_size(n)
        corners = supersequence.union_diagram_corners(n)
        family = supersequence.union_family(n)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    import math

    density = size / (n * math.log(n)) if n > 1 else float("nan")
    data = {
        "n": n,
        "diagram": list(diagram.parts),
        "size": size,
        "corners": corners,
        "members": [list(p.values) for p in family.members],
        "size_over_n_log_n": None if n == 1 else density,
    }
    human = "{}\nsize: {}\ncorners: {}\nfamily:\n{}".format(
        render_ferrers(diagram),
        size,
        corners,
        "\n".join("  " + str(p) for p in family.members),
    )
    if n > 1:
        human += f"\nsize / (n ln n): {density:.4f}"
    _emit(data, as_json, human)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve_cmd(host: str, port: int) -> None:
    """Run the HTTP service wrapping the library."""
    import uvicorn

    from .api import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
