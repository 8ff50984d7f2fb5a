//! Critical-line ζ, zeta-sums and their transforms, and moment integrals.

mod critical;
mod moments;
mod sums;

pub use critical::{
    hardy_z, in_validated_range, riemann_siegel_theta, zeta_critical, zeta_euler_maclaurin, zeta_riemann_siegel,
    ZetaMethod, DEFAULT_EM_ORDER, MAX_EM_ORDER, RS_ASYMPTOTIC_FROM, RS_MIN_T, VALIDATED_RANGE,
};
pub use moments::{
    moment_integral, plain_fourth_moment, subconvexity_ratio, subconvexity_ratio_scan, MomentResult, ScanReport,
    WeightSpec,
};
pub use sums::{atkinson_reindex, weyl_square, zeta_sum, ReindexReport, Table2, WeightTable, WeylSquare, ZetaSumSpec};
