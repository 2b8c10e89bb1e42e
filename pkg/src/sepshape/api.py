"""HTTP service exposing the library's operations.

Each endpoint is a stateless wrapper over a pure function, so the
service scales to concurrent clients trivially.  Run it with
``sepshape serve`` or ``uvicorn sepshape.api:app``.
"""

from __future__ import annotations

from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import exchange as exchange_mod
from . import greene as greene_mod
from . import patterns, supersequence
from .rsk import rsk as rsk_of, shape_of
from .core import IndexedSubsequence, ParseError, Permutation, Word

app = FastAPI(
    title="sepshape",
    description=(
        "Row-insertion shapes of words, separable-permutation pattern "
        "containment, Greene witnesses, and supersequence lower bounds."
    ),
)

WordInput = Union[str, list[int]]


def _word(value: WordInput) -> Word:
    try:
        return Word.parse(value) if isinstance(value, str) else Word(tuple(value))
    except (ParseError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _perm(value: WordInput) -> Permutation:
    try:
        return Permutation.parse(value) if isinstance(value, str) else Permutation(tuple(value))
    except (ParseError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


class WordRequest(BaseModel):
    word: WordInput


class RskResponse(BaseModel):
    word: list[int]
    p: list[list[int]]
    q: list[list[int]]
    shape: list[int]


class ShapeResponse(BaseModel):
    word: list[int]
    shape: list[int]


class PatternRequest(BaseModel):
    word: WordInput
    pattern: WordInput


class PatternResponse(BaseModel):
    contains: bool
    positions: Optional[list[int]] = None


class SeparableRequest(BaseModel):
    permutation: WordInput


class SeparableResponse(BaseModel):
    separable: bool
    pattern: Optional[str] = None
    positions: Optional[list[int]] = None


class GreeneRequest(BaseModel):
    word: WordInput
    d: int = Field(ge=0)


class GreeneResponse(BaseModel):
    maximum: int
    members: list[list[int]]


class ExchangeRequest(BaseModel):
    permutation: WordInput
    u: list[int]
    w: list[int]
    w2: list[int]


class SubsequenceOut(BaseModel):
    positions: list[int]
    letters: list[int]


class ExchangeResponse(BaseModel):
    alpha: SubsequenceOut
    beta: SubsequenceOut


class WitnessRequest(BaseModel):
    permutation: WordInput
    d: Optional[int] = Field(default=None, ge=1)


class WitnessResponse(BaseModel):
    shape: list[int]
    members: list[SubsequenceOut]


class SweepRequest(BaseModel):
    sigma_len: int = Field(ge=1)
    word_len: int = Field(ge=0)
    word_alphabet: Optional[int] = Field(default=None, ge=1)
    word_perms: bool = False
    sample: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None
    jobs: Optional[int] = Field(default=None, ge=1)


class SweepViolation(BaseModel):
    word: list[int]
    sigma: list[int]


class SweepResponse(BaseModel):
    instances: int
    violation_count: int
    violations: list[SweepViolation]
    elapsed: float


class ScsRequest(BaseModel):
    permutations: list[WordInput]
    budget: int = Field(default=supersequence.DEFAULT_STATE_BUDGET, ge=1)


class ScsResponse(BaseModel):
    length: int
    witness: list[int]
    lower_bound: Optional[int]
    tight: Optional[bool]


class SupersequenceRequest(BaseModel):
    word: WordInput
    permutation: WordInput


class SupersequenceResponse(BaseModel):
    supersequence: bool


class MuResponse(BaseModel):
    n: int
    diagram: list[int]
    size: int
    corners: int
    members: list[list[int]]


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/rsk", response_model=RskResponse)
def rsk_endpoint(req: WordRequest) -> RskResponse:
    word = _word(req.word)
    pair = rsk_of(word)
    return RskResponse(
        word=list(word.letters),
        p=[list(r) for r in pair.p.rows],
        q=[list(r) for r in pair.q.rows],
        shape=list(pair.shape.parts),
    )


@app.post("/shape", response_model=ShapeResponse)
def shape_endpoint(req: WordRequest) -> ShapeResponse:
    word = _word(req.word)
    return ShapeResponse(word=list(word.letters), shape=list(shape_of(word).parts))


@app.post("/pattern", response_model=PatternResponse)
def pattern_endpoint(req: PatternRequest) -> PatternResponse:
    witness = patterns.contains_pattern(_word(req.word), _perm(req.pattern))
    if witness is None:
        return PatternResponse(contains=False)
    return PatternResponse(contains=True, positions=list(witness))


@app.post("/separable", response_model=SeparableResponse)
def separable_endpoint(req: SeparableRequest) -> SeparableResponse:
    perm = _perm(req.permutation)
    if patterns.is_separable(perm):
        return SeparableResponse(separable=True)
    for forbidden in ("2413", "3142"):
        occ = patterns.contains_pattern(perm.word, Permutation.parse(forbidden))
        if occ is not None:
            return SeparableResponse(separable=False, pattern=forbidden, positions=list(occ))
    raise AssertionError("unreachable")


@app.post("/greene", response_model=GreeneResponse)
def greene_endpoint(req: GreeneRequest) -> GreeneResponse:
    word = _word(req.word)
    total = greene_mod.greene_sum(word, req.d)
    members = []
    if req.d >= 1:
        members = [list(m.values) for m in greene_mod.max_family(word, req.d).members]
    return GreeneResponse(maximum=total, members=members)


@app.post("/exchange", response_model=ExchangeResponse)
def exchange_endpoint(req: ExchangeRequest) -> ExchangeResponse:
    perm = _perm(req.permutation)
    host = perm.word
    try:
        result = exchange_mod.exchange_pair(
            perm,
            IndexedSubsequence(host, tuple(sorted(req.u))),
            IndexedSubsequence(host, tuple(sorted(req.w))),
            IndexedSubsequence(host, tuple(sorted(req.w2))),
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return ExchangeResponse(
        alpha=SubsequenceOut(
            positions=list(result.alpha.positions),
            letters=list(perm.display_letters(result.alpha)),
        ),
        beta=SubsequenceOut(
            positions=list(result.beta.positions),
            letters=list(perm.display_letters(result.beta)),
        ),
    )


@app.post("/witness", response_model=WitnessResponse)
def witness_endpoint(req: WitnessRequest) -> WitnessResponse:
    perm = _perm(req.permutation)
    shape = shape_of(perm)
    d = req.d if req.d is not None else max(len(shape.parts), 1)
    try:
        family = exchange_mod.greene_witness(perm, d)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return WitnessResponse(
        shape=list(shape.parts),
        members=[
            SubsequenceOut(positions=list(m.positions), letters=list(perm.display_letters(m)))
            for m in family.members
        ],
    )


@app.post("/verify-theorem", response_model=SweepResponse)
def verify_theorem_endpoint(req: SweepRequest) -> SweepResponse:
    try:
        report = exchange_mod.theorem_sweep(
            req.sigma_len,
            req.word_len,
            word_alphabet=req.word_alphabet,
            words_from_permutations=req.word_perms,
            sample=req.sample,
            seed=req.seed,
            jobs=req.jobs,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return SweepResponse(
        instances=report.instance_count,
        violation_count=report.violation_count,
        violations=[
            SweepViolation(word=list(v.word.letters), sigma=list(v.sigma.values))
            for v in report.violations
        ],
        elapsed=report.elapsed,
    )


@app.post("/scs", response_model=ScsResponse)
def scs_endpoint(req: ScsRequest) -> ScsResponse:
    members = tuple(_perm(p) for p in req.permutations)
    try:
        result = supersequence.scs_exact(supersequence.PermutationSet(members), budget=req.budget)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return ScsResponse(
        length=result.length,
        witness=list(result.witness.letters),
        lower_bound=result.lower_bound,
        tight=result.bound_tight,
    )


@app.post("/supersequence-check", response_model=SupersequenceResponse)
def supersequence_endpoint(req: SupersequenceRequest) -> SupersequenceResponse:
    return SupersequenceResponse(
        supersequence=supersequence.is_supersequence(_word(req.word), _perm(req.permutation))
    )


@app.get("/mu/{n}", response_model=MuResponse)
def mu_endpoint(n: int) -> MuResponse:
    try:
        diagram = supersequence.union_diagram(n)
        family = supersequence.union_family(n)
        return MuResponse(
            n=n,
            diagram=list(diagram.parts),
            size=supersequence.union_diagram_size(n),
            corners=supersequence.union_diagram_corners(n),
            members=[list(p.values) for p in family.members],
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
