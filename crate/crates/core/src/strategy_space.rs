//! Strategies as real unit vectors: `R^4` for the full SU(2) space with
//! components `(w, x, y, z)` as coefficients of `(I, i sx, i sy, i sz)`, and
//! `R^3` with components `(w, y, z)` for the two-parameter subset where the
//! `x` coefficient is zero.
//!
//! `U` and `-U` describe the same strategy; [`canonicalize4`]/[`canonicalize3`]
//! fix the sign so the first nonzero component is positive.

use num_complex::Complex64;

use crate::error::{GameError, Result};
use crate::quantum_core::Unitary2;

const UNIT_TOL: f64 = 1e-12;

fn check_unit(comps: &[f64]) -> Result<()> {
    let norm_sq: f64 = comps.iter().map(|c| c * c).sum();
    if comps.iter().any(|c| !c.is_finite()) || (norm_sq - 1.0).abs() > UNIT_TOL {
        return Err(GameError::Validation(format!(
            "strategy vector must have unit norm, got norm^2 = {norm_sq}"
        )));
    }
    Ok(())
}

/// Unit vector `(w, x, y, z)` representing a full SU(2) strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyVec4 {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl StrategyVec4 {
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        check_unit(&[w, x, y, z])?;
        Ok(Self { w, x, y, z })
    }

    /// Scale an arbitrary nonzero vector onto the unit sphere.
    pub fn normalized(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (w * w + x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm < 1e-12 {
            return Err(GameError::Validation(
                "cannot normalize a zero strategy vector".into(),
            ));
        }
        Ok(Self {
            w: w / norm,
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    pub fn components(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

/// Unit vector `(w, y, z)` representing a two-parameter strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyVec3 {
    w: f64,
    y: f64,
    z: f64,
}

impl StrategyVec3 {
    pub fn new(w: f64, y: f64, z: f64) -> Result<Self> {
        check_unit(&[w, y, z])?;
        Ok(Self { w, y, z })
    }

    pub fn normalized(w: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (w * w + y * y + z * z).sqrt();
        if !norm.is_finite() || norm < 1e-12 {
            return Err(GameError::Validation(
                "cannot normalize a zero strategy vector".into(),
            ));
        }
        Ok(Self {
            w: w / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    pub fn components(&self) -> [f64; 3] {
        [self.w, self.y, self.z]
    }
}

/// Angles `(theta, phi)` of the two-parameter strategy matrix, with
/// `theta in [0, pi]` and `phi in [0, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyAngles {
    theta: f64,
    phi: f64,
}

impl StrategyAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(GameError::Domain(format!(
                "theta must lie in [0, pi], got {theta}"
            )));
        }
        if !phi.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&phi) {
            return Err(GameError::Domain(format!(
                "phi must lie in [0, pi/2], got {phi}"
            )));
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// The matrix `w I + x i sx + y i sy + z i sz`.
pub fn unitary_from_vec4(u: &StrategyVec4) -> Unitary2 {
    let [w, x, y, z] = u.components();
    let m = [
        [Complex64::new(w, z), Complex64::new(y, x)],
        [Complex64::new(-y, x), Complex64::new(w, -z)],
    ];
    Unitary2::new(m).expect("unit quaternion maps to SU(2)")
}

/// Recover the `(w, x, y, z)` coefficients of a special unitary.
pub fn vec4_from_unitary(u: &Unitary2) -> StrategyVec4 {
    let m = u.matrix();
    let w = (m[0][0].re + m[1][1].re) / 2.0;
    let z = (m[0][0].im - m[1][1].im) / 2.0;
    let y = (m[0][1].re - m[1][0].re) / 2.0;
    let x = (m[0][1].im + m[1][0].im) / 2.0;
    StrategyVec4::normalized(w, x, y, z).expect("SU(2) matrix has nonzero coefficients")
}

/// `(w, y, z) = (cos(theta/2) cos phi, sin(theta/2), cos(theta/2) sin phi)`.
pub fn vec3_from_angles(a: &StrategyAngles) -> StrategyVec3 {
    let half = a.theta() / 2.0;
    StrategyVec3::new(
        half.cos() * a.phi().cos(),
        half.sin(),
        half.cos() * a.phi().sin(),
    )
    .expect("angle parameterization lies on the unit sphere")
}

/// Embed `(w, y, z)` into the full space as `(w, 0, y, z)`.
pub fn embed_vec3(u: &StrategyVec3) -> StrategyVec4 {
    let [w, y, z] = u.components();
    StrategyVec4::new(w, 0.0, y, z).expect("embedding preserves the norm")
}

/// Flip the sign of `v` in place so its first nonzero component is positive.
pub fn canonicalize_slice(v: &mut [f64]) -> Result<()> {
    for &c in v.iter() {
        if c != 0.0 {
            if c < 0.0 {
                for c in v.iter_mut() {
                    *c = -*c;
                }
            }
            // normalize -0.0 for stable comparisons
            for c in v.iter_mut() {
                if *c == 0.0 {
                    *c = 0.0;
                }
            }
            return Ok(());
        }
    }
    Err(GameError::Validation(
        "cannot canonicalize a zero vector".into(),
    ))
}

pub fn canonicalize4(u: &StrategyVec4) -> StrategyVec4 {
    let mut c = u.components();
    canonicalize_slice(&mut c).expect("unit vector is nonzero");
    StrategyVec4 {
        w: c[0],
        x: c[1],
        y: c[2],
        z: c[3],
    }
}

pub fn canonicalize3(u: &StrategyVec3) -> StrategyVec3 {
    let mut c = u.components();
    canonicalize_slice(&mut c).expect("unit vector is nonzero");
    StrategyVec3 {
        w: c[0],
        y: c[1],
        z: c[2],
    }
}

/// Parse a CLI strategy literal into a unit vector of dimension `dim`.
///
/// Accepted forms: named tokens `C`, `D`, `Q`; `vec3:w,y,z`; `vec4:w,x,y,z`
/// (full space only); `angles:theta,phi`. Numeric vectors are normalized;
/// angles are radians unless `degrees` is set.
pub fn parse_strategy(text: &str, dim: usize, degrees: bool) -> Result<Vec<f64>> {
    assert!(dim == 3 || dim == 4);
    let named = |w: f64, y: f64, z: f64| -> Vec<f64> {
        if dim == 3 {
            vec![w, y, z]
        } else {
            vec![w, 0.0, y, z]
        }
    };
    match text {
        "C" => return Ok(named(1.0, 0.0, 0.0)),
        "D" => return Ok(named(0.0, 1.0, 0.0)),
        "Q" => return Ok(named(0.0, 0.0, 1.0)),
        _ => {}
    }
    let (kind, rest) = text.split_once(':').ok_or_else(|| {
        GameError::Domain(format!(
            "unknown strategy literal '{text}' (expected C, D, Q, vec3:.., vec4:.. or angles:..)"
        ))
    })?;
    let nums: Vec<f64> = rest
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| GameError::Domain(format!("invalid number '{p}' in '{text}'")))
        })
        .collect::<Result<_>>()?;
    match (kind, nums.as_slice()) {
        ("vec3", [w, y, z]) => {
            let v = StrategyVec3::normalized(*w, *y, *z)?;
            let [w, y, z] = v.components();
            Ok(named(w, y, z))
        }
        ("vec4", [w, x, y, z]) => {
            if dim == 3 {
                if x.abs() > 1e-12 {
                    return Err(GameError::Domain(
                        "vec4 literal with nonzero x is not a two-parameter strategy".into(),
                    ));
                }
                let v = StrategyVec3::normalized(*w, *y, *z)?;
                let [w, y, z] = v.components();
                Ok(named(w, y, z))
            } else {
                Ok(StrategyVec4::normalized(*w, *x, *y, *z)?
                    .components()
                    .to_vec())
            }
        }
        ("angles", [theta, phi]) => {
            let scale = if degrees {
                std::f64::consts::PI / 180.0
            } else {
                1.0
            };
            let a = StrategyAngles::new(theta * scale, phi * scale)?;
            let [w, y, z] = vec3_from_angles(&a).components();
            Ok(named(w, y, z))
        }
        _ => Err(GameError::Domain(format!(
            "malformed strategy literal '{text}'"
        ))),
    }
}
