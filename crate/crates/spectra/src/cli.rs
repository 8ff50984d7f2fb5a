//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "spectra",
    version,
    about = "Numerical workbench for zeta-sums, integer-matrix lattices, divisor correlations and Maass forms",
    long_about = None,
    after_help = "Exit status: 0 on success, 1 when a numerical method fails to reach its tolerance, \
                  2 on invalid input or IO errors. Errors are reported on stderr as one line: \
                  `error kind=<kind> message=<json string>`."
)]
pub struct Cli {
    /// key=value file whose entries act as flags placed before the command
    /// line's own, so explicit flags win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file. Without it, records go to $SPECTRA_OUT_DIR/<command>.<ext>
    /// when that variable is set, else to stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Add the wall-clock duration to every record. Off by default so that
    /// reruns produce byte-identical files.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct QuadArgs {
    /// Absolute tolerance of the quadrature.
    #[arg(long, default_value_t = 1e-10)]
    pub abs_tol: f64,

    /// Maximum bisection depth of adaptive quadrature.
    #[arg(long, default_value_t = 20)]
    pub max_depth: u32,

    /// Use this many fixed Gauss–Kronrod panels instead of adaptive refinement.
    #[arg(long)]
    pub panels: Option<u32>,
}

#[derive(Debug, Args)]
pub struct FormArgs {
    /// Maass coefficient file (`r=`, optional `parity=`, then `n,rho` lines).
    #[arg(long, value_name = "PATH", conflicts_with = "synthetic")]
    pub file: Option<PathBuf>,

    /// Use a synthetic coefficient table instead of a file.
    #[arg(long, value_enum)]
    pub synthetic: Option<SyntheticForm>,

    /// Spectral parameter of a synthetic form.
    #[arg(long, default_value_t = 9.5336952613536)]
    pub r: f64,

    /// Number of coefficients of a synthetic form.
    #[arg(long, default_value_t = 1000)]
    pub n_coeff: usize,

    /// Tolerance of the Hecke multiplicativity check on ingestion.
    #[arg(long, default_value_t = spectra_core::automorphic::HECKE_TOLERANCE)]
    pub hecke_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SyntheticForm {
    /// ρ(1) = 1, every other coefficient 0
    Delta,
    /// ρ(n) = 1/n²
    InverseSquare,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long, default_value_t = 0.0)]
    pub x: f64,
    #[arg(long, default_value_t = 1.0)]
    pub y: f64,
    /// Angle of k[θ], reduced mod π.
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WindowKind {
    Constant,
    Indicator,
    Gaussian,
    Rational,
    /// The Gamma-type window produced by the Kirillov seed of exponent α.
    Seed,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    /// Shape of the weight W(n/m).
    #[arg(long, value_enum, default_value_t = WindowKind::Constant)]
    pub window: WindowKind,
    #[arg(long, default_value_t = 1.0)]
    pub w_value: f64,
    #[arg(long, default_value_t = 0.0)]
    pub w_lo: f64,
    #[arg(long, default_value_t = 1.0)]
    pub w_hi: f64,
    #[arg(long, default_value_t = 1.0)]
    pub w_center: f64,
    #[arg(long, default_value_t = 1.0)]
    pub w_width: f64,
    #[arg(long, default_value_t = 1.0)]
    pub w_scale: f64,
    #[arg(long, default_value_t = 2.0)]
    pub w_power: f64,
    #[arg(long, default_value_t = 2.0)]
    pub w_alpha: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Em,
    Rs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFunction {
    /// f ≡ 1
    One,
    /// f(M) = det M
    Det,
    /// f(M) = trace M
    Trace,
    /// f(M) = k² + l² + n² + m²
    Frobenius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DivisorBackendArg {
    Sieve,
    Trial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MaassBackendArg {
    Bessel,
    Jacquet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LSchemeArg {
    Direct,
    Smoothed,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ζ(1/2 + it) by Euler–Maclaurin or Riemann–Siegel.
    ZetaEval(ZetaEvalArgs),
    /// The zeta-sum Σ_{N<n≤2N} w(n) n^{it}.
    ZetaSum(ZetaSumArgs),
    /// Σ_n w(n) |Σ_{m≤M} (m+n)^{it}|² split into its diagonal and shifted parts.
    WeylSquare(WeylSquareArgs),
    /// Z_k(ζ, g) = ∫ |ζ(1/2+it)|^{2k} g(t) dt for a Gaussian weight g.
    Moment(MomentArgs),
    /// ∫_{−T}^{T} |ζ(1/2+it)|⁴ dt.
    FourthMoment(FourthMomentArgs),
    /// Samples |ζ(1/2+it)| / (t^{1/6} log t), the shape of the van der Corput bound.
    SubconvexityScan(ScanArgs),
    /// Splits Σ f(M) over integer 2×2 matrices in a box by the sign of det M.
    LatticePartition(LatticePartitionArgs),
    /// Upper-triangular representatives (a b; 0 d), ad = n, 0 ≤ b < d, of SL(2,ℤ)\{det n}.
    HeckeCosets(HeckeCosetsArgs),
    /// Factors a determinant-n integer matrix as γ · (a b; 0 d) with γ in SL(2,ℤ).
    HeckeFactor(HeckeFactorArgs),
    /// Truncated Poincaré series Σ_{M ∈ SL(2,ℤ)} A exp(−‖Mg‖²/σ²).
    Poincare(PoincareArgs),
    /// The additive divisor sum Σ_{n≤N} d(n) d(n+m) W(n/m) and Ingham's leading term.
    DivisorSum(DivisorSumArgs),
    /// d(n) for n ≤ N.
    DivisorSieve(DivisorSieveArgs),
    /// Reads and validates a Maass coefficient file.
    MaassIngest(MaassIngestArgs),
    /// The truncated Fourier–Whittaker expansion of a Maass form at g = n[x] a[y] k[θ].
    MaassEval(MaassEvalArgs),
    /// The Jacquet transform 𝒜^δ φ_ℓ(g) = ∫ e(−δξ) φ_ℓ(w n[ξ] g, ν) dξ.
    Jacquet(JacquetArgs),
    /// Finite-difference Casimir Ω applied to a Maass expansion, against 1/4 + r².
    CasimirCheck(CasimirArgs),
    /// L(s) = Σ ρ(n) n^{−s}, directly (Re s > 1) or Gaussian-smoothed.
    LfunEval(LfunEvalArgs),
    /// ∫ |L(1/2+it)|² g(t) dt with the smoothed partial sum; heuristic.
    LfunMoment(LfunMomentArgs),
    /// F(x+iy) = y^{α+1/2} Σ ρ(n) n^α e(n(x+iy)), the Kirillov pull-back of the seed u^{α+1/2} e^{−2πu}.
    KirillovExpand(KirillovArgs),
    /// The m-th x-Fourier coefficient of |F|², by closed form and by quadrature.
    ShiftedCoefficient(ShiftedCoefficientArgs),
    /// Σ_{n≤N} ρ(n) ρ(n+m) W(n/m), optionally also generated from the seed.
    ShiftedConvolution(ShiftedConvolutionArgs),
    /// ∫₀¹ e(nx) conj(e((n+m)x)) dx by quadrature.
    Orthogonality(OrthogonalityArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::ZetaEval(_) => "zeta-eval",
            Command::ZetaSum(_) => "zeta-sum",
            Command::WeylSquare(_) => "weyl-square",
            Command::Moment(_) => "moment",
            Command::FourthMoment(_) => "fourth-moment",
            Command::SubconvexityScan(_) => "subconvexity-scan",
            Command::LatticePartition(_) => "lattice-partition",
            Command::HeckeCosets(_) => "hecke-cosets",
            Command::HeckeFactor(_) => "hecke-factor",
            Command::Poincare(_) => "poincare",
            Command::DivisorSum(_) => "divisor-sum",
            Command::DivisorSieve(_) => "divisor-sieve",
            Command::MaassIngest(_) => "maass-ingest",
            Command::MaassEval(_) => "maass-eval",
            Command::Jacquet(_) => "jacquet",
            Command::CasimirCheck(_) => "casimir-check",
            Command::LfunEval(_) => "lfun-eval",
            Command::LfunMoment(_) => "lfun-moment",
            Command::KirillovExpand(_) => "kirillov-expand",
            Command::ShiftedCoefficient(_) => "shifted-coefficient",
            Command::ShiftedConvolution(_) => "shifted-convolution",
            Command::Orthogonality(_) => "orthogonality",
        }
    }

    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::ZetaEval(a) => &a.output,
            Command::ZetaSum(a) => &a.output,
            Command::WeylSquare(a) => &a.output,
            Command::Moment(a) => &a.output,
            Command::FourthMoment(a) => &a.output,
            Command::SubconvexityScan(a) => &a.output,
            Command::LatticePartition(a) => &a.output,
            Command::HeckeCosets(a) => &a.output,
            Command::HeckeFactor(a) => &a.output,
            Command::Poincare(a) => &a.output,
            Command::DivisorSum(a) => &a.output,
            Command::DivisorSieve(a) => &a.output,
            Command::MaassIngest(a) => &a.output,
            Command::MaassEval(a) => &a.output,
            Command::Jacquet(a) => &a.output,
            Command::CasimirCheck(a) => &a.output,
            Command::LfunEval(a) => &a.output,
            Command::LfunMoment(a) => &a.output,
            Command::KirillovExpand(a) => &a.output,
            Command::ShiftedCoefficient(a) => &a.output,
            Command::ShiftedConvolution(a) => &a.output,
            Command::Orthogonality(a) => &a.output,
        }
    }
}

#[derive(Debug, Args)]
pub struct ZetaEvalArgs {
    /// Heights t, comma separated or repeated.
    #[arg(long = "t", required = true, value_delimiter = ',', num_args = 1..)]
    pub t: Vec<f64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Euler–Maclaurin order (number of Bernoulli terms).
    #[arg(long, default_value_t = spectra_core::zeta::DEFAULT_EM_ORDER)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ZetaSumArgs {
    #[arg(long = "N")]
    pub n: u64,
    #[arg(long = "t")]
    pub t: f64,
    /// Weights w(N+1), ..., w(2N), comma separated; default all 1.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub weights: Option<Vec<f64>>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WeylSquareArgs {
    #[arg(long = "M")]
    pub m: u64,
    #[arg(long = "t")]
    pub t: f64,
    /// The weight is the indicator of [w-from, w-to].
    #[arg(long, default_value_t = 1)]
    pub w_from: u64,
    #[arg(long)]
    pub w_to: u64,
    /// Also emit one record per shift h = |m − m′|.
    #[arg(long)]
    pub shifts: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    /// Power: the integrand is |ζ|^{2k}.
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// Centre T₀ of the Gaussian weight.
    #[arg(long = "T0")]
    pub t0: f64,
    /// Width Δ of the Gaussian weight.
    #[arg(long)]
    pub delta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FourthMomentArgs {
    #[arg(long = "T")]
    pub t: f64,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 2.0)]
    pub t_lo: f64,
    #[arg(long, default_value_t = 1e4)]
    pub t_hi: f64,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Emit every sample, not only the summary.
    #[arg(long)]
    pub points: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LatticePartitionArgs {
    /// Entries range over −B..=B.
    #[arg(long = "B")]
    pub b: i64,
    #[arg(long, value_enum, default_value_t = MatrixFunction::One)]
    pub f: MatrixFunction,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct HeckeCosetsArgs {
    #[arg(long)]
    pub n: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct HeckeFactorArgs {
    /// The matrix (k l; n m) as k,l,n,m.
    #[arg(long, value_delimiter = ',', num_args = 4, required = true, allow_negative_numbers = true)]
    pub matrix: Vec<i64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PoincareArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    /// Sum over ‖Mg‖² ≤ cutoff.
    #[arg(long)]
    pub cutoff: f64,
    /// Fail unless the tail bound is below this.
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DivisorSumArgs {
    #[arg(long = "N")]
    pub n: u64,
    #[arg(long)]
    pub m: i64,
    #[command(flatten)]
    pub window: WindowArgs,
    #[arg(long, value_enum, default_value_t = DivisorBackendArg::Sieve)]
    pub backend: DivisorBackendArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DivisorSieveArgs {
    #[arg(long = "N")]
    pub n: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MaassIngestArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Also emit one record per coefficient.
    #[arg(long)]
    pub coefficients: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MaassEvalArgs {
    #[command(flatten)]
    pub form: FormArgs,
    #[command(flatten)]
    pub point: PointArgs,
    /// Weight ℓ of φ_ℓ; nonzero ℓ needs the Jacquet backend.
    #[arg(long, default_value_t = 0)]
    pub ell: i32,
    #[arg(long = "N-trunc", default_value_t = 40)]
    pub n_trunc: usize,
    #[arg(long, value_enum, default_value_t = MaassBackendArg::Bessel)]
    pub backend: MaassBackendArg,
    /// Fail unless the expansion tail bound is below this.
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct JacquetArgs {
    #[arg(long, default_value_t = 0.0)]
    pub nu_re: f64,
    #[arg(long, default_value_t = 9.5336952613536)]
    pub nu_im: f64,
    #[arg(long, default_value_t = 0)]
    pub ell: i32,
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub delta: SignArg,
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CasimirArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Points x:y, comma separated; default five generic points.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub points: Option<Vec<String>>,
    /// Finite-difference step; default y/200.
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long = "N-trunc", default_value_t = 40)]
    pub n_trunc: usize,
    /// Relative tolerance of the Richardson check and of the eigenvalue test.
    #[arg(long, default_value_t = 1e-3)]
    pub rel_tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LfunEvalArgs {
    #[command(flatten)]
    pub form: FormArgs,
    #[arg(long, default_value_t = 0.5)]
    pub s_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub s_im: f64,
    #[arg(long, value_enum, default_value_t = LSchemeArg::Smoothed)]
    pub scheme: LSchemeArg,
    /// Smoothing cutoff X.
    #[arg(long = "X", default_value_t = 100.0)]
    pub x: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LfunMomentArgs {
    #[command(flatten)]
    pub form: FormArgs,
    #[arg(long = "T0")]
    pub t0: f64,
    #[arg(long)]
    pub delta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long = "X", default_value_t = 100.0)]
    pub x: f64,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct KirillovArgs {
    #[command(flatten)]
    pub form: FormArgs,
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    pub x: f64,
    #[arg(long, default_value_t = 1.0)]
    pub y: f64,
    #[arg(long = "N-trunc", default_value_t = 100)]
    pub n_trunc: usize,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ShiftedCoefficientArgs {
    #[command(flatten)]
    pub form: FormArgs,
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    /// Shifts m, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "0")]
    pub m: Vec<usize>,
    /// Heights y, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub y: Vec<f64>,
    #[arg(long = "N-trunc", default_value_t = 120)]
    pub n_trunc: usize,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ShiftedConvolutionArgs {
    #[command(flatten)]
    pub form: FormArgs,
    #[arg(long)]
    pub m: usize,
    #[arg(long = "N-trunc", default_value_t = 500)]
    pub n_trunc: usize,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Also generate the sum by integrating the seed's shifted Fourier
    /// coefficient over y (uses the seed window of exponent w-alpha).
    #[arg(long)]
    pub seed_route: bool,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OrthogonalityArgs {
    /// Frequencies n, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true, allow_negative_numbers = true)]
    pub n: Vec<i64>,
    /// Shifts m, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true, allow_negative_numbers = true)]
    pub m: Vec<i64>,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}
