"""Evaluation report models (serialised as JSON)."""

from pydantic import BaseModel, ConfigDict, Field


class ScoreLists(BaseModel):
    model_config = ConfigDict(frozen=True)

    genuine: list[float] = Field(default_factory=list, description="Genuine query scores")
    skilled: list[float] = Field(default_factory=list, description="Skilled-forgery scores")
    random: list[float] = Field(default_factory=list, description="Random-impostor scores")


class WriterResult(BaseModel):
    """Per-writer diagnostics; values are None when the writer lacks the needed samples."""

    model_config = ConfigDict(frozen=True)

    writer_id: str
    queries: int
    forgeries: int
    sf_eer: float | None = None
    mu_g: float | None = None
    mu_f: float | None = None
    delta: float | None = None


class EvalReport(BaseModel):
    """Pooled verification results for one checkpoint and evaluation split."""

    model_config = ConfigDict(frozen=True)

    enroll: int = Field(description="References averaged into each prototype")
    sf_eer: float | None = Field(description="Skilled-forgery EER")
    rf_eer: float | None = Field(description="Random-impostor EER")
    tau_sf: float | None = None
    tau_rf: float | None = None
    mu_g: float | None = None
    mu_f: float | None = None
    delta: float | None = None
    per_writer: list[WriterResult] = Field(default_factory=list)
    scores: ScoreLists = Field(default_factory=ScoreLists)


class MarginReport(BaseModel):
    """Margin diagnostics of one checkpoint on one split."""

    model_config = ConfigDict(frozen=True)

    split: str
    step: int
    mu_g: float | None = None
    mu_f: float | None = None
    delta: float | None = None
    genuine_pairs: int = 0
    forgery_pairs: int = 0
    per_writer: list[WriterResult] = Field(default_factory=list)
