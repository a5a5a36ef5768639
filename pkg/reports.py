"""
Pydantic models for every record the toolkit exports
"""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from errors import VerificationMismatch

CheckStatus = Literal["pass", "fail", "skipped"]


class PathRecord(BaseModel):
    """JSON form of a path word"""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Slope parameter")
    n: int = Field(..., ge=0, description="Number of north steps (or blocks)")
    word: str = Field(..., description="Canonical step word")
    form: Literal["ballot", "dyck"]


class LabellingRecord(PathRecord):
    """JSON form of a labelled path"""
    labels: List[int] = Field(..., description="Label of each north step, bottom to top")


class IntervalRecord(BaseModel):
    """JSON form of a Tamari interval with its statistics"""
    model_config = ConfigDict(frozen=True)

    lower: str
    upper: str
    contacts: int = Field(..., ge=1)
    rise: int = Field(..., ge=0)
    dist: Optional[int] = Field(None, ge=0)


class SeriesDump(BaseModel):
    """Truncated series with exact coefficients"""
    var: Literal["t", "z"]
    order: int = Field(..., ge=0)
    m: int = Field(..., ge=1)
    stage: str
    coeffs: List[Dict[str, str]] = Field(..., description="Monomial to rational coefficient, one map per order")


class CountRow(BaseModel):
    """One row of the interval count table"""
    n: int = Field(..., ge=0)
    unlabelled: int = Field(..., ge=0)
    labelled: int = Field(..., ge=0)
    unlabelled_closed: Optional[int] = None
    labelled_closed: Optional[int] = None
    poly: Dict[str, str]


class CheckReport(BaseModel):
    """Outcome of one verification"""
    check: str
    m: Optional[int] = None
    N: Optional[int] = None
    status: CheckStatus
    first_mismatch_order: Optional[int] = None
    cap_exceeded: bool = False
    detail: str = ""

    @classmethod
    def passed(cls, check: str, m: Optional[int] = None, N: Optional[int] = None,
               detail: str = "") -> "CheckReport":
        """Build a passing report"""
        return cls(check=check, m=m, N=N, status="pass", detail=detail)

    @classmethod
    def failed(cls, check: str, m: Optional[int] = None, N: Optional[int] = None,
               detail: str = "", order: Optional[int] = None) -> "CheckReport":
        """Build a failing report"""
        return cls(check=check, m=m, N=N, status="fail", detail=detail,
                   first_mismatch_order=order)

    @classmethod
    def skipped(cls, check: str, m: Optional[int] = None, N: Optional[int] = None,
                detail: str = "") -> "CheckReport":
        """Build a report for a check outside its supported range"""
        return cls(check=check, m=m, N=N, status="skipped", detail=detail)

    @classmethod
    def capped(cls, check: str, m: Optional[int] = None, N: Optional[int] = None,
               detail: str = "") -> "CheckReport":
        """Build a failing report for a check stopped by a resource cap"""
        return cls(check=check, m=m, N=N, status="fail", detail=detail, cap_exceeded=True)

    @property
    def ok(self) -> bool:
        """True unless the check failed"""
        return self.status != "fail"

    def raise_for_status(self) -> "CheckReport":
        """Raise VerificationMismatch when the check failed"""
        if self.status == "fail":
            raise VerificationMismatch(self.check, self.detail or "mismatch", self.first_mismatch_order)
        return self


class VerifyReport(BaseModel):
    """Aggregated outcome of a verify run"""
    status: CheckStatus
    first_failure: Optional[str] = None
    checks: List[CheckReport]


class QTableRow(BaseModel):
    """n![t^n]F(t,q;1,1) as a polynomial in q"""
    n: int
    coefficients: List[str] = Field(..., description="Coefficient of q^0, q^1, ...")
    q_degree: int
    longest_chain: int


class QReport(BaseModel):
    """Outcome of the q-analogue verification"""
    m: int
    n_max: int
    status: CheckStatus
    rows: List[QTableRow]
    detail: str = ""


class PhiRecord(BaseModel):
    """Phi_0..Phi_m as polynomial maps in z, v, y"""
    m: int = Field(..., ge=1)
    N: int = Field(..., ge=0)
    phi: List[Dict[str, str]]
    positive_parts: List[Dict[str, str]] = Field(..., description="Phi_k^> for k < m, keys in z, u, y")
