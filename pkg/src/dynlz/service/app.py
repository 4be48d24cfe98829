"""FastAPI service wrapping the engine: sessions plus batch jobs."""

from __future__ import annotations

import uuid

from fastapi import FastAPI, HTTPException

from ..dynstr import EditKind, EditOp
from ..engine import Engine
from ..gadgets import OVInstance, brute_orthogonal_pairs, solve_ov
from ..runner import OracleMismatch, run, scaling_csv, scaling_report
from ..scripts import ScriptError
from ..workload import gen_workload
from .schemas import (EditRequest, EditResponse, FactorizationOut, OVRequest,
                      OVResponse, PhraseOut, RunRequest, RunResponse,
                      ScalingRequest, ScalingResponse, SessionCreate,
                      SessionInfo, WorkloadRequest, WorkloadResponse)

_KIND = {"I": EditKind.INSERT, "D": EditKind.DELETE, "S": EditKind.SUBSTITUTE}


def create_app() -> FastAPI:
    app = FastAPI(title="dynlz", version="0.1.0",
                  description="Dynamic LZ77 factorization service")
    sessions: dict[str, Engine] = {}

    def get_session(sid: str) -> Engine:
        eng = sessions.get(sid)
        if eng is None:
            raise HTTPException(404, f"no session {sid}")
        return eng

    @app.get("/health")
    def health():
        return {"status": "ok", "sessions": len(sessions)}

    @app.post("/sessions", response_model=SessionInfo)
    def create_session(req: SessionCreate):
        if req.symbols is not None and req.text is not None:
            raise HTTPException(422, "give symbols or text, not both")
        symbols = req.symbols if req.symbols is not None else \
            [ord(c) for c in (req.text or "")]
        try:
            eng = Engine(symbols, backend=req.backend, tree=req.tree,
                         seed=req.seed, lmax=req.lmax,
                         debug_checks=req.debug_checks)
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from None
        sid = uuid.uuid4().hex[:12]
        sessions[sid] = eng
        return SessionInfo(session_id=sid, length=len(eng),
                           lz_length=eng.lz_size(), backend=req.backend)

    @app.get("/sessions/{sid}", response_model=SessionInfo)
    def session_info(sid: str):
        eng = get_session(sid)
        return SessionInfo(session_id=sid, length=len(eng),
                           lz_length=eng.lz_size(), backend=eng.backend)

    @app.delete("/sessions/{sid}")
    def drop_session(sid: str):
        get_session(sid)
        del sessions[sid]
        return {"deleted": sid}

    @app.post("/sessions/{sid}/edits", response_model=EditResponse)
    def apply_edit(sid: str, req: EditRequest):
        eng = get_session(sid)
        before = dict(eng.stats.totals)
        phases_before = eng.stats.phase_totals()
        try:
            eng.update(EditOp(_KIND[req.kind], req.pos, req.symbol))
        except (IndexError, ValueError) as exc:
            raise HTTPException(422, str(exc)) from None
        after = eng.stats.totals
        phases_after = eng.stats.phase_totals()
        return EditResponse(
            length=len(eng), lz_length=eng.lz_size(),
            calls={k: after[k] - before.get(k, 0) for k in after},
            phase_calls={k: phases_after.get(k, 0) - phases_before.get(k, 0)
                         for k in phases_after})

    @app.get("/sessions/{sid}/queries/lzlength")
    def q_lzlength(sid: str, i: int | None = None):
        eng = get_session(sid)
        try:
            value = eng.lz_size() if i is None else eng.lz_length(i)
        except IndexError as exc:
            raise HTTPException(422, str(exc)) from None
        return {"lz_length": value, "i": i}

    @app.get("/sessions/{sid}/queries/select", response_model=PhraseOut)
    def q_select(sid: str, i: int):
        eng = get_session(sid)
        try:
            p = eng.select_phrase(i)
        except IndexError as exc:
            raise HTTPException(422, str(exc)) from None
        return PhraseOut(start=p.start, end=p.end, kind=p.kind, source=p.source)

    @app.get("/sessions/{sid}/queries/contain", response_model=PhraseOut)
    def q_contain(sid: str, i: int):
        eng = get_session(sid)
        try:
            p = eng.containing_phrase(i)
        except IndexError as exc:
            raise HTTPException(422, str(exc)) from None
        return PhraseOut(start=p.start, end=p.end, kind=p.kind, source=p.source)

    @app.post("/sessions/{sid}/queries/recompute", response_model=FactorizationOut)
    def q_recompute(sid: str):
        eng = get_session(sid)
        phrases = eng.recompute_factorization()
        return FactorizationOut(count=len(phrases), phrases=[
            PhraseOut(start=p.start, end=p.end, kind=p.kind, source=p.source)
            for p in phrases])

    @app.get("/sessions/{sid}/stats")
    def session_stats(sid: str):
        return get_session(sid).stats_snapshot()

    @app.post("/run", response_model=RunResponse)
    def run_script(req: RunRequest):
        try:
            report = run(req.script, backend=req.backend, tree=req.tree,
                         seed=req.seed, lmax=req.lmax,
                         check_oracle=req.check_oracle,
                         debug_checks=req.debug_checks)
        except ScriptError as exc:
            return RunResponse(ok=False, report={}, failure="parse",
                               detail={"message": str(exc),
                                       "line": exc.line_no})
        except OracleMismatch as exc:
            return RunResponse(ok=False, report={}, failure="oracle",
                               detail=exc.dump)
        except Exception as exc:  # noqa: BLE001 - surfaced as internal
            return RunResponse(ok=False, report={}, failure="internal",
                               detail={"message": f"{type(exc).__name__}: {exc}"})
        csv = report.to_csv() if req.report == "csv" else None
        if report.error is not None:
            return RunResponse(ok=False, report=report.to_dict(), csv=csv,
                               failure="parse", detail=report.error)
        return RunResponse(ok=True, report=report.to_dict(), csv=csv)

    @app.post("/workload", response_model=WorkloadResponse)
    def workload(req: WorkloadRequest):
        try:
            text = gen_workload(req.kind, req.n, req.steps, req.seed,
                                req.alphabet)
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from None
        return WorkloadResponse(script=text)

    @app.post("/scaling", response_model=ScalingResponse)
    def scaling(req: ScalingRequest):
        report = scaling_report(req.n_list, req.steps, req.seed,
                                backend=req.backend, lmax=req.lmax,
                                alphabet=req.alphabet)
        return ScalingResponse(report=report, csv=scaling_csv(report))

    @app.post("/ov", response_model=OVResponse)
    def ov(req: OVRequest):
        try:
            inst = OVInstance(tuple(map(tuple, req.a)), tuple(map(tuple, req.b)))
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from None
        rep = solve_ov(inst, lambda syms: Engine(
            syms, backend=req.backend, seed=req.seed))
        return OVResponse(orthogonal_found=rep.orthogonal_found,
                          expected_full_diff=rep.expected_full_diff,
                          per_vector=rep.per_vector,
                          brute_pairs=brute_orthogonal_pairs(inst))

    return app


app = create_app()
