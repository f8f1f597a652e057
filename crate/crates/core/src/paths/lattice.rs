use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::opuc::{Coeffs, VerblunskySequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    Lukasiewicz,
    GentleMotzkin,
    Schroder,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::Lukasiewicz => "lukasiewicz",
            Model::GentleMotzkin => "gmotzkin",
            Model::Schroder => "schroder",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(1, 1)`.
    Up,
    /// `(1, 0)`; the 0-down-step of the Łukasiewicz model.
    Level,
    /// `(1, -k)` with `k >= 1`.
    Down(u32),
    /// `(0, -1)`, Schröder only.
    Vertical,
}

impl Step {
    pub fn dx(self) -> i64 {
        match self {
            Step::Vertical => 0,
            _ => 1,
        }
    }

    pub fn dy(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down(k) => -(k as i64),
            Step::Vertical => -1,
        }
    }

    /// Łukasiewicz step with height change `dy >= -b`.
    pub fn from_dy(dy: i64) -> Step {
        match dy {
            1 => Step::Up,
            0 => Step::Level,
            d => Step::Down((-d) as u32),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up => write!(f, "U"),
            Step::Level => write!(f, "H"),
            Step::Down(1) => write!(f, "D"),
            Step::Down(k) => write!(f, "D{k}"),
            Step::Vertical => write!(f, "V"),
        }
    }
}

/// A path in one of the three models, stored as a start point and steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub model: Model,
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Validates step types, nonnegativity and the gentle-Motzkin parity rules.
    pub fn new(model: Model, start: (i64, i64), steps: Vec<Step>) -> Result<Self> {
        let path = Self { model, start, steps };
        path.validate()?;
        Ok(path)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPath(msg));
        if self.start.1 < 0 {
            return bad(format!("start height {} is negative", self.start.1));
        }
        let (mut x, mut y) = self.start;
        for (i, &step) in self.steps.iter().enumerate() {
            let allowed = match (self.model, step) {
                (Model::Lukasiewicz, Step::Vertical) => false,
                (Model::Lukasiewicz, _) => true,
                (Model::GentleMotzkin, Step::Up) => (x + y) % 2 == 0,
                (Model::GentleMotzkin, Step::Down(1)) => (x + y).rem_euclid(2) == 1,
                (Model::GentleMotzkin, Step::Level) => true,
                (Model::GentleMotzkin, _) => false,
                (Model::Schroder, Step::Down(_)) => false,
                (Model::Schroder, _) => true,
            };
            if !allowed {
                return bad(format!("step {i} ({step}) not allowed at ({x},{y})"));
            }
            x += step.dx();
            y += step.dy();
            if y < 0 {
                return bad(format!("step {i} goes below the axis"));
            }
        }
        Ok(())
    }

    pub fn end(&self) -> (i64, i64) {
        self.steps
            .iter()
            .fold(self.start, |(x, y), s| (x + s.dx(), y + s.dy()))
    }

    /// Start point of every step followed by the end point.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut out = vec![self.start];
        let mut p = self.start;
        for s in &self.steps {
            p = (p.0 + s.dx(), p.1 + s.dy());
            out.push(p);
        }
        out
    }

    pub fn max_height(&self) -> i64 {
        self.points().iter().map(|p| p.1).max().unwrap_or(0)
    }

    /// Space-separated step labels, e.g. `U H D2 V`.
    pub fn render(&self) -> String {
        self.steps.iter().map(Step::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            write!(f, "(empty)")
        } else {
            f.write_str(&self.render())
        }
    }
}

/// Łukasiewicz weight of the `k`-down-step from height `b` (`k = 0` is level):
/// `-alpha_b conj(alpha_{b-k-1}) prod_{b-k <= j < b} rho_j`.
pub fn lukasiewicz_down_weight<S: Scalar>(c: &Coeffs<S>, b: usize, k: usize) -> S {
    let lo = b - k;
    -(c.alpha(b as i64).clone() * c.alpha_bar(lo as i64 - 1)) * c.rho_product(lo, b)
}

/// Gentle-Motzkin weight of a step starting at `(a, b)`.
pub fn gmotzkin_weight<S: Scalar>(c: &Coeffs<S>, a: i64, b: usize, step: Step) -> S {
    let even = (a + b as i64).rem_euclid(2) == 0;
    match step {
        Step::Up => S::one(),
        Step::Down(_) => c.rho(b - 1).clone(),
        Step::Level if even => c.alpha(b as i64).clone(),
        Step::Level => -c.alpha_bar(b as i64 - 1).clone(),
        Step::Vertical => S::zero(),
    }
}

/// Schröder weights `(level at b, vertical from b)`; level is
/// `-conj(alpha_{b-1}) / conj(alpha_b)` and vertical is
/// `conj(alpha_{b-2}) / conj(alpha_{b-1}) * rho_{b-1}`.
pub fn schroder_level_weight<S: Scalar>(c: &Coeffs<S>, b: usize) -> Result<S> {
    let den = c.alpha_bar(b as i64);
    if den.is_zero() {
        return Err(Error::ZeroVerblunsky(b));
    }
    (-c.alpha_bar(b as i64 - 1).clone()).try_div(den)
}

pub fn schroder_vertical_weight<S: Scalar>(c: &Coeffs<S>, b: usize) -> Result<S> {
    let den = c.alpha_bar(b as i64 - 1);
    if den.is_zero() {
        return Err(Error::ZeroVerblunsky(b - 1));
    }
    Ok(c.alpha_bar(b as i64 - 2).clone().try_div(den)? * c.rho(b - 1))
}

fn step_weight<S: Scalar>(c: &Coeffs<S>, model: Model, at: (i64, i64), step: Step) -> Result<S> {
    let b = at.1 as usize;
    Ok(match (model, step) {
        (_, Step::Up) => S::one(),
        (Model::Lukasiewicz, Step::Level) => lukasiewicz_down_weight(c, b, 0),
        (Model::Lukasiewicz, Step::Down(k)) => lukasiewicz_down_weight(c, b, k as usize),
        (Model::GentleMotzkin, s) => gmotzkin_weight(c, at.0, b, s),
        (Model::Schroder, Step::Level) => schroder_level_weight(c, b)?,
        (Model::Schroder, Step::Vertical) => schroder_vertical_weight(c, b)?,
        _ => return Err(Error::InvalidPath(format!("step {step} in model {}", model.as_str()))),
    })
}

/// Product of the step weights of `path`.
pub fn path_weight<S: Scalar>(path: &LatticePath, vs: &VerblunskySequence<S>) -> Result<S> {
    let c = vs.window(path.max_height() as usize + 1)?;
    path_weight_in(path, &c)
}

pub fn path_weight_in<S: Scalar>(path: &LatticePath, c: &Coeffs<S>) -> Result<S> {
    let mut w = S::one();
    let points = path.points();
    for (step, &at) in path.steps.iter().zip(&points) {
        w = w * &step_weight(c, path.model, at, *step)?;
    }
    Ok(w)
}

/// Every path counted by `mu(n, r, s)` in `model`, in lexicographic step order.
///
/// Łukasiewicz: `(0,r) -> (n,s)`. Gentle Motzkin: `(-r,r) -> (2n-s,s)`.
/// Schröder: `(0,r) -> (n,s)` not starting with a vertical step.
pub fn enumerate(model: Model, n: usize, r: usize, s: usize, cap: usize) -> Result<Vec<LatticePath>> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    let (n, r, s) = (n as i64, r as i64, s as i64);
    match model {
        Model::Lukasiewicz => luk_dfs(r, n, s, &mut steps, &mut out, cap, (0, r))?,
        Model::GentleMotzkin => {
            let len = 2 * n - s + r;
            if len >= 0 {
                gmot_dfs((-r, r), len, s, &mut steps, &mut out, cap, (-r, r))?;
            }
        }
        Model::Schroder => schroder_dfs((0, r), n, s, &mut steps, &mut out, cap, (0, r))?,
    }
    Ok(out)
}

fn push_path(
    model: Model,
    start: (i64, i64),
    steps: &[Step],
    out: &mut Vec<LatticePath>,
    cap: usize,
) -> Result<()> {
    if out.len() >= cap {
        return Err(Error::CapExceeded(cap));
    }
    out.push(LatticePath { model, start, steps: steps.to_vec() });
    Ok(())
}

fn luk_dfs(
    h: i64,
    left: i64,
    s: i64,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
    cap: usize,
    start: (i64, i64),
) -> Result<()> {
    if left == 0 {
        if h == s {
            push_path(Model::Lukasiewicz, start, steps, out, cap)?;
        }
        return Ok(());
    }
    for dy in (-h..=1).rev() {
        let nh = h + dy;
        if nh + (left - 1) < s {
            continue;
        }
        steps.push(Step::from_dy(dy));
        luk_dfs(nh, left - 1, s, steps, out, cap, start)?;
        steps.pop();
    }
    Ok(())
}

fn gmot_dfs(
    at: (i64, i64),
    left: i64,
    s: i64,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
    cap: usize,
    start: (i64, i64),
) -> Result<()> {
    let (x, y) = at;
    if (y - s).abs() > left {
        return Ok(());
    }
    if left == 0 {
        return push_path(Model::GentleMotzkin, start, steps, out, cap);
    }
    let even = (x + y).rem_euclid(2) == 0;
    let mut options = vec![];
    if even {
        options.push(Step::Up);
    }
    options.push(Step::Level);
    if !even && y > 0 {
        options.push(Step::Down(1));
    }
    for step in options {
        steps.push(step);
        gmot_dfs((x + 1, y + step.dy()), left - 1, s, steps, out, cap, start)?;
        steps.pop();
    }
    Ok(())
}

fn schroder_dfs(
    at: (i64, i64),
    n: i64,
    s: i64,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
    cap: usize,
    start: (i64, i64),
) -> Result<()> {
    let (x, y) = at;
    if y + (n - x) < s {
        return Ok(());
    }
    if x == n && y == s {
        return push_path(Model::Schroder, start, steps, out, cap);
    }
    if x < n {
        for step in [Step::Up, Step::Level] {
            steps.push(step);
            schroder_dfs((x + 1, y + step.dy()), n, s, steps, out, cap, start)?;
            steps.pop();
        }
    }
    if y > 0 && !steps.is_empty() {
        steps.push(Step::Vertical);
        schroder_dfs((x, y - 1), n, s, steps, out, cap, start)?;
        steps.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn catalan(n: usize) -> usize {
        (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn lukasiewicz_counts_are_catalan() {
        let paths = enumerate(Model::Lukasiewicz, 3, 0, 0, 100).unwrap();
        assert_eq!(paths.len(), 5);
        for n in 0..=8 {
            assert_eq!(enumerate(Model::Lukasiewicz, n, 0, 0, 10_000).unwrap().len(), catalan(n));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(enumerate(Model::Lukasiewicz, 8, 0, 0, 100), Err(Error::CapExceeded(100)));
    }

    #[test]
    fn enumerated_paths_are_valid_and_land_on_target() {
        for model in [Model::Lukasiewicz, Model::GentleMotzkin, Model::Schroder] {
            for (n, r, s) in [(2, 1, 0), (3, 2, 2), (1, 0, 1), (2, 0, 3)] {
                for p in enumerate(model, n, r, s, 10_000).unwrap() {
                    p.validate().unwrap();
                    let end = match model {
                        Model::GentleMotzkin => (2 * n as i64 - s as i64, s as i64),
                        _ => (n as i64, s as i64),
                    };
                    assert_eq!(p.end(), end, "{model:?} {p}");
                }
            }
        }
    }

    #[test]
    fn schroder_paths_never_open_with_vertical() {
        for p in enumerate(Model::Schroder, 3, 2, 1, 10_000).unwrap() {
            assert_ne!(p.steps.first(), Some(&Step::Vertical));
        }
    }

    #[test]
    fn invalid_paths_are_rejected() {
        assert!(LatticePath::new(Model::Lukasiewicz, (0, 0), vec![Step::Down(1)]).is_err());
        assert!(LatticePath::new(Model::GentleMotzkin, (0, 1), vec![Step::Up]).is_err());
        assert!(LatticePath::new(Model::GentleMotzkin, (0, 1), vec![Step::Down(1)]).is_ok());
        assert!(LatticePath::new(Model::Lukasiewicz, (0, 0), vec![Step::Vertical]).is_err());
    }

    #[test]
    fn rendering_uses_step_labels() {
        let p = LatticePath::new(
            Model::Lukasiewicz,
            (0, 0),
            vec![Step::Up, Step::Up, Step::Level, Step::Down(2)],
        )
        .unwrap();
        assert_eq!(p.render(), "U U H D2");
    }

    #[test]
    fn single_level_step_weighs_alpha0() {
        let vs = VerblunskySequence::generic();
        let p = LatticePath::new(Model::Lukasiewicz, (0, 0), vec![Step::Level]).unwrap();
        assert_eq!(path_weight(&p, &vs).unwrap(), Poly::alpha(0));
        let q = LatticePath::new(Model::Schroder, (0, 0), vec![Step::Level]).unwrap();
        assert_eq!(path_weight(&q, &vs).unwrap().to_string(), "ab0^-1");
    }
}
