"""
FastAPI Backend for broken Lefschetz fibration diagrams
This API validates diagrams, computes their invariants and applies moves.
"""
from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field
from typing import Optional, List, Dict, Any
from datetime import datetime
import pandas as pd
import uvicorn

from components.config import load_settings
from components.utils.logging import setup_logging, get_logger
from components.blf_io import (
    bundled_names, load, parse, parse_cycle, parse_script, resolve_path, serialize, to_graph,
)
from components.diagram import (
    connectivity_report, counts, euler_characteristic, monodromy_image, parity_check,
    round_handle_report, stratum_table, thom_reduction_target, validate,
)
from components.errors import BlfError, BlfParseError
from components.models import BlfDiagram, Handedness
from components.moves import connect_fibers, pencil_euler, run_script

# Initialize FastAPI app
app = FastAPI(
    title="BLF Diagram API",
    description="""
    ## BLF Diagram API

    Diagrams are sent as BLF text or named after a bundled example.

    ### Route Categories:
    1. **Examples** - List and fetch bundled diagrams
    2. **Analysis** - Validation, Euler characteristic, monodromy
    3. **Moves** - Move scripts and the fiber-connecting pipeline
    """,
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc"
)

# CORS middleware for frontend integration
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],  # Change to specific origins in production
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Initialize
settings = load_settings()
setup_logging(settings.log_level)
logger = get_logger(__name__)


# ========================================
# REQUEST/RESPONSE MODELS
# ========================================

class DiagramRequest(BaseModel):
    """A diagram as BLF text or as the name of a bundled example"""
    text: Optional[str] = Field(None, description="BLF document, starting with 'blf 1'")
    example: Optional[str] = Field(None, description="Bundled example name, e.g. cp2")


class MonodromyRequest(DiagramRequest):
    """Round handle check for one face"""
    face: str = Field(description="Face label whose Lefschetz points form the word")
    cls: str = Field(alias="class", description="Comma-separated coordinates, e.g. 1,0,0,0")
    component: Optional[str] = Field(None, description="Fiber component, required when the fiber is disconnected")


class ScriptRequest(DiagramRequest):
    """Move script to run against the diagram"""
    script: str = Field(description="One move per line")


class IssueResponse(BaseModel):
    code: str
    element: Optional[str] = None
    message: str


class ValidationResponse(BaseModel):
    """Validation outcome"""
    ok: bool
    violations: List[IssueResponse]
    warnings: List[IssueResponse]
    counts: Dict[str, int]


class DiagramResponse(BaseModel):
    """Rewritten diagram"""
    text: str = Field(description="Canonical BLF text")
    euler: int
    trail: List[str] = Field(default_factory=list, description="One line per applied move")


# ========================================
# HELPER FUNCTIONS
# ========================================

def dataframe_to_dict_list(df: pd.DataFrame) -> List[Dict]:
    """Convert pandas DataFrame to list of dicts with NaN handling"""
    if df.empty:
        return []
    return df.astype(object).where(pd.notna(df), None).to_dict(orient="records")


def read_diagram(request: DiagramRequest) -> BlfDiagram:
    if (request.text is None) == (request.example is None):
        raise HTTPException(status_code=400, detail="Send exactly one of 'text' and 'example'")
    if request.example is not None:
        if request.example not in bundled_names(settings):
            raise HTTPException(status_code=404, detail=f"Example {request.example} not found")
        return load(request.example, settings)
    return parse(request.text)


def valid_diagram(request: DiagramRequest) -> BlfDiagram:
    d = read_diagram(request)
    report = validate(d)
    if not report.ok:
        raise HTTPException(status_code=422, detail=report.lines())
    return d


def blf_error(e: BlfError) -> HTTPException:
    if isinstance(e, BlfParseError):
        return HTTPException(status_code=400, detail=e.diagnostic())
    return HTTPException(status_code=422, detail=e.diagnostic())


def issue(i) -> IssueResponse:
    return IssueResponse(code=i.code, element=i.element, message=i.message)


# ========================================
# API ROUTES
# ========================================

@app.get("/", tags=["General"])
async def root():
    """
    **API Health Check**

    Returns basic API information and status.
    """
    return {
        "service": "BLF Diagram API",
        "version": "1.0.0",
        "status": "operational",
        "documentation": "/docs"
    }


@app.get("/health", tags=["General"])
async def health_check():
    return {
        "status": "healthy",
        "timestamp": datetime.now().isoformat(),
        "examples": len(bundled_names(settings)),
    }


# ========================================
# EXAMPLES
# ========================================

@app.get("/examples", response_model=List[str], tags=["Examples"])
async def list_examples():
    """**List bundled diagrams**"""
    return bundled_names(settings)


@app.get("/examples/{name}", tags=["Examples"])
async def get_example(name: str, as_graph: bool = Query(False, description="Return the graph export instead of BLF text")):
    """**Fetch one bundled diagram**"""
    if name not in bundled_names(settings):
        raise HTTPException(status_code=404, detail=f"Example {name} not found")
    text = resolve_path(name, settings).read_text(encoding="utf-8")
    if as_graph:
        return to_graph(parse(text))
    return {"name": name, "text": text}


# ========================================
# ANALYSIS ROUTES
# ========================================

@app.post("/validate", response_model=ValidationResponse, tags=["Analysis"])
async def validate_diagram(request: DiagramRequest):
    """
    **Validate a diagram**

    Violations make `ok` false; warnings never do.
    """
    try:
        d = read_diagram(request)
        report = validate(d)
        return ValidationResponse(
            ok=report.ok,
            violations=[issue(i) for i in report.violations],
            warnings=[issue(i) for i in report.warnings],
            counts=counts(d),
        )
    except BlfError as e:
        raise blf_error(e)


@app.post("/euler", tags=["Analysis"])
async def euler(request: DiagramRequest):
    """**Euler characteristic of the total space**"""
    try:
        d = valid_diagram(request)
        if d.is_pencil:
            return {"euler": pencil_euler(d), "pencil": True}
        return {"euler": euler_characteristic(d), "pencil": False}
    except BlfError as e:
        raise blf_error(e)


@app.post("/report", tags=["Analysis"])
async def report(request: DiagramRequest):
    """
    **Full invariant report**

    Euler characteristic, parity, connectivity, stratum table and the
    monodromy of every face that a round handle must be checked against.
    """
    try:
        d = valid_diagram(request)
        if d.is_pencil:
            return {"pencil": True, "basepoints": d.basepoints, "euler": pencil_euler(d)}
        connectivity = connectivity_report(d)
        handedness = Handedness(settings.twist_handedness)
        return {
            "pencil": False,
            "euler": euler_characteristic(d),
            "parity_ok": parity_check(d),
            "thom_target": thom_reduction_target(d),
            "counts": counts(d),
            "sections": d.sections,
            "connected": connectivity.connected,
            "faces": connectivity.faces,
            "strata": dataframe_to_dict_list(stratum_table(d)),
            "round_handles": dataframe_to_dict_list(round_handle_report(d, handedness)),
        }
    except BlfError as e:
        raise blf_error(e)


@app.post("/check-monodromy", tags=["Analysis"])
async def check_monodromy_endpoint(request: MonodromyRequest):
    """**Is a class fixed up to sign by the monodromy of a face?**"""
    try:
        d = valid_diagram(request)
        z = parse_cycle(request.cls)
        image = monodromy_image(d, request.face, z, request.component, Handedness(settings.twist_handedness))
        return {"fixed": image == z or image == -z, "image": list(image.coords)}
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except BlfError as e:
        raise blf_error(e)


# ========================================
# MOVE ROUTES
# ========================================

@app.post("/moves/apply", response_model=DiagramResponse, tags=["Moves"])
async def apply_moves(request: ScriptRequest):
    """**Run a move script**"""
    try:
        d = valid_diagram(request)
        result, trail = run_script(d, parse_script(request.script), settings)
        logger.info(f"Applied {len(trail)} moves")
        euler_value = pencil_euler(result) if result.is_pencil else euler_characteristic(result)
        return DiagramResponse(text=serialize(result), euler=euler_value, trail=trail)
    except BlfError as e:
        logger.error(f"Move script failed: {e.diagnostic()}")
        raise blf_error(e)


@app.post("/moves/connect-fibers", response_model=DiagramResponse, tags=["Moves"])
async def connect_fibers_endpoint(request: DiagramRequest):
    """**Flip, flip and slip until every fiber is connected**"""
    try:
        result = connect_fibers(valid_diagram(request), settings.check_intermediates)
        return DiagramResponse(text=serialize(result), euler=euler_characteristic(result))
    except BlfError as e:
        logger.error(f"connect-fibers failed: {e.diagnostic()}")
        raise blf_error(e)


# ========================================
# RUN SERVER
# ========================================

if __name__ == "__main__":
    uvicorn.run(
        "api:app",
        host="0.0.0.0",
        port=8000,
        reload=True,
        log_level="info"
    )
