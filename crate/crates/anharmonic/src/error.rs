use thiserror::Error;

/// Errors produced by constructions and solvers in this crate.
///
/// Every variant names the violated precondition or the failure point so that
/// callers (in particular the CLI config validator) can report it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coupling must satisfy c > -1/8 (got c = {c}); the wave function falls into the center")]
    CouplingTooSingular { c: f64 },

    #[error("Bargmann index must be positive (got k0 = {k0})")]
    NonPositiveBargmann { k0: f64 },

    #[error("representation dimension must be at least 2 (got {dim})")]
    RepTooSmall { dim: usize },

    #[error("radial grid needs n_points >= 64 (got {n_points})")]
    GridTooCoarse { n_points: usize },

    #[error("radial grid needs q_max > 0 (got {q_max})")]
    BadGridExtent { q_max: f64 },

    #[error("frequency profile not evaluable at t = {t}: {reason}")]
    BadProfile { t: f64, reason: &'static str },

    #[error("integration span must have t1 > t0 (got t0 = {t0}, t1 = {t1})")]
    BadSpan { t0: f64, t1: f64 },

    #[error("tolerance must lie in [1e-12, 1e-4] (got {tol})")]
    BadTolerance { tol: f64 },

    #[error("invariant coefficient g_minus must stay positive; crossed zero near t = {t}")]
    SingularInvariant { t: f64 },

    #[error("disentangling coordinate singularity: x(t) crosses zero near t = {t}; split the span or use direct evolution")]
    CoordinateSingularity { t: f64 },

    #[error("degenerate disentangling coefficient: omega^2(t) = omega0^2 near t = {t}; use the direct coefficient ODE or direct evolution")]
    DegenerateCoefficient { t: f64 },

    #[error("squeeze ratio 2|u_plus|/u_0 = {ratio} >= 1: non-normalizable squeeze")]
    SqueezeRatioTooLarge { ratio: f64 },

    #[error("coherent-state amplitude must satisfy |z| < 1 (got |z| = {abs_z}): non-normalizable state")]
    CoherentAmplitudeTooLarge { abs_z: f64 },

    #[error("truncation tail |c_(N-1)|^2 = {tail:.3e} exceeds {limit:.1e}; raise the representation dimension")]
    TruncationTail { tail: f64, limit: f64 },

    #[error("grid cannot resolve the requested state: tail mass {tail:.3e} beyond q_max (need <= {limit:.1e}); enlarge or refine the grid")]
    GridResolution { tail: f64, limit: f64 },

    #[error("matrix exponential out of range: coefficient exponent {exponent:.1} would overflow")]
    ExponentOverflow { exponent: f64 },

    #[error("adaptive integrator failed: step size underflow at t = {t}")]
    StepSizeUnderflow { t: f64 },

    #[error("classical trajectory reached the singular core: q -> 0 near t = {t}")]
    CoreCollision { t: f64 },

    #[error("linear solve failed: {reason}")]
    NumericalFailure { reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
