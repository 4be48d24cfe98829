"""Request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class SessionCreate(BaseModel):
    symbols: list[int] | None = None
    text: str | None = None
    backend: str = "fast"
    tree: str = "fast"
    seed: int = 0
    lmax: int | None = None
    debug_checks: bool = False


class SessionInfo(BaseModel):
    session_id: str
    length: int
    lz_length: int
    backend: str


class EditRequest(BaseModel):
    kind: str = Field(pattern="^[IDS]$")
    pos: int
    symbol: int | None = None


class EditResponse(BaseModel):
    length: int
    lz_length: int
    calls: dict[str, int]
    phase_calls: dict[str, int]


class PhraseOut(BaseModel):
    start: int
    end: int
    kind: str
    source: int | None = None


class FactorizationOut(BaseModel):
    count: int
    phrases: list[PhraseOut]


class RunRequest(BaseModel):
    script: str
    backend: str = "fast"
    tree: str = "fast"
    seed: int = 0
    lmax: int | None = None
    check_oracle: bool = False
    debug_checks: bool = False
    report: str = "json"


class RunResponse(BaseModel):
    ok: bool
    report: dict
    csv: str | None = None
    failure: str | None = None     # "parse" | "oracle" | "internal"
    detail: dict | None = None


class WorkloadRequest(BaseModel):
    kind: str = "random"
    n: int = 64
    steps: int = 32
    seed: int = 0
    alphabet: int = 4


class WorkloadResponse(BaseModel):
    script: str


class ScalingRequest(BaseModel):
    n_list: list[int]
    steps: int = 50
    seed: int = 0
    backend: str = "fast"
    lmax: int | None = None
    alphabet: int = 4


class ScalingResponse(BaseModel):
    report: dict
    csv: str


class OVRequest(BaseModel):
    a: list[list[int]]
    b: list[list[int]]
    backend: str = "naive"
    seed: int = 0


class OVResponse(BaseModel):
    orthogonal_found: bool
    expected_full_diff: int
    per_vector: list[dict]
    brute_pairs: list[tuple[int, int]]
