from .realization import (
    Model,
    Realization,
    edge_lengths,
    facet_diameters,
    max_diameter,
    simplex_diameter,
)
from .contact import (
    contact_form_beta,
    face_tangency_margin,
    legendrian_deviation,
    lemma_profile,
    lutz_profile_check,
    standard_profile,
)
from .disks import (
    DiskSpec,
    PLSolidTorusModel,
    delta_hat,
    disk_containment_report,
    meridian_fit,
)
from .off import off_export
