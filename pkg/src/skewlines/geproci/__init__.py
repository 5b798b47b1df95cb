from skewlines.geproci.certificate import CertificateStatus, CICertificate, ci_certificate
from skewlines.geproci.hilbert import HilbertProfile, ci_h_vector, h_vector, hilbert_function
from skewlines.geproci.verdict import (
    Classification,
    CrossCheck,
    GeprociStatus,
    GeprociVerdict,
    chg_crosscheck,
    is_geproci,
    restriction_property,
)

__all__ = [
    "CICertificate",
    "CertificateStatus",
    "Classification",
    "CrossCheck",
    "GeprociStatus",
    "GeprociVerdict",
    "HilbertProfile",
    "chg_crosscheck",
    "ci_certificate",
    "ci_h_vector",
    "h_vector",
    "hilbert_function",
    "is_geproci",
    "restriction_property",
]
