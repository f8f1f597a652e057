//! Weight-preserving correspondences between the three path models.

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::opuc::VerblunskySequence;

use super::lattice::{enumerate, path_weight, LatticePath, Model, Step};

/// Łukasiewicz path from `(0,r)` to its gentle-Motzkin image from `(-r,r)`:
/// an up-step stays an up-step, a `k`-down-step becomes `H D^k H`.
pub fn pi(path: &LatticePath) -> Result<LatticePath> {
    if path.model != Model::Lukasiewicz || path.start.0 != 0 {
        return Err(Error::InvalidPath("expected a Łukasiewicz path starting at x = 0".into()));
    }
    let mut steps = Vec::new();
    for &step in &path.steps {
        match step {
            Step::Up => steps.push(Step::Up),
            Step::Level => steps.extend([Step::Level, Step::Level]),
            Step::Down(k) => {
                steps.push(Step::Level);
                steps.extend(std::iter::repeat(Step::Down(1)).take(k as usize));
                steps.push(Step::Level);
            }
            Step::Vertical => unreachable!("validated Łukasiewicz path"),
        }
    }
    let r = path.start.1;
    LatticePath::new(Model::GentleMotzkin, (-r, r), steps)
}

/// Inverse of [`pi`]; fails on gentle-Motzkin paths outside its image.
pub fn pi_inverse(path: &LatticePath) -> Result<LatticePath> {
    if path.model != Model::GentleMotzkin || path.start.0 != -path.start.1 {
        return Err(Error::InvalidPath("expected a gentle Motzkin path from (-r, r)".into()));
    }
    let mut steps = Vec::new();
    let mut it = path.steps.iter().peekable();
    while let Some(&step) = it.next() {
        match step {
            Step::Up => steps.push(Step::Up),
            Step::Level => {
                let mut k = 0;
                while it.peek() == Some(&&Step::Down(1)) {
                    it.next();
                    k += 1;
                }
                if it.next() != Some(&Step::Level) {
                    return Err(Error::InvalidPath("unmatched level step".into()));
                }
                steps.push(if k == 0 { Step::Level } else { Step::Down(k) });
            }
            _ => return Err(Error::InvalidPath(format!("unexpected step {step}"))),
        }
    }
    LatticePath::new(Model::Lukasiewicz, (0, path.start.1), steps)
}

/// Collapses a Schröder path to its Łukasiewicz representative: every `U V`
/// becomes `H`, then each block `H V^k` becomes a `k`-down-step.
pub fn schroder_to_lukasiewicz(path: &LatticePath) -> Result<LatticePath> {
    if path.model != Model::Schroder {
        return Err(Error::InvalidPath("expected a Schröder path".into()));
    }
    let mut reduced = Vec::with_capacity(path.steps.len());
    let mut i = 0;
    while i < path.steps.len() {
        if path.steps[i] == Step::Up && path.steps.get(i + 1) == Some(&Step::Vertical) {
            reduced.push(Step::Level);
            i += 2;
        } else {
            reduced.push(path.steps[i]);
            i += 1;
        }
    }
    let mut steps = Vec::new();
    let mut it = reduced.into_iter().peekable();
    while let Some(step) = it.next() {
        match step {
            Step::Up => steps.push(Step::Up),
            Step::Level => {
                let mut k = 0;
                while it.peek() == Some(&Step::Vertical) {
                    it.next();
                    k += 1;
                }
                steps.push(if k == 0 { Step::Level } else { Step::Down(k) });
            }
            _ => return Err(Error::InvalidPath("vertical step without a preceding level step".into())),
        }
    }
    LatticePath::new(Model::Lukasiewicz, path.start, steps)
}

/// Schröder paths sharing one Łukasiewicz representative.
#[derive(Clone, Debug)]
pub struct SchroderGroup {
    pub representative: LatticePath,
    pub members: Vec<LatticePath>,
}

/// Partition of the Schröder paths of `mu(n, r, s)` indexed by the
/// Łukasiewicz paths with the same endpoints.
pub fn schroder_grouping(n: usize, r: usize, s: usize, cap: usize) -> Result<Vec<SchroderGroup>> {
    let reps = enumerate(Model::Lukasiewicz, n, r, s, cap)?;
    let mut groups: Vec<SchroderGroup> = reps
        .into_iter()
        .map(|representative| SchroderGroup { representative, members: Vec::new() })
        .collect();
    for p in enumerate(Model::Schroder, n, r, s, cap)? {
        let rep = schroder_to_lukasiewicz(&p)?;
        let g = groups
            .iter_mut()
            .find(|g| g.representative == rep)
            .ok_or_else(|| Error::InvalidPath(format!("no representative for {p}")))?;
        g.members.push(p);
    }
    Ok(groups)
}

/// Checks that each group's Schröder weights sum to its representative's weight.
pub fn group_weights_match<S: Scalar>(
    groups: &[SchroderGroup],
    vs: &VerblunskySequence<S>,
    tol: f64,
) -> Result<bool> {
    for g in groups {
        let mut total = S::zero();
        for m in &g.members {
            total += path_weight(m, vs)?;
        }
        if !total.approx_eq(&path_weight(&g.representative, vs)?, tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn parse(text: &str) -> Vec<Step> {
        text.split_whitespace()
            .map(|t| match t {
                "U" => Step::Up,
                "H" => Step::Level,
                "D" => Step::Down(1),
                "V" => Step::Vertical,
                d => Step::Down(d[1..].parse().unwrap()),
            })
            .collect()
    }

    #[test]
    fn worked_example_maps_to_its_gentle_motzkin_image() {
        let luk = LatticePath::new(
            Model::Lukasiewicz,
            (0, 4),
            parse("U D2 U U H U D4 H U U U D2 D"),
        )
        .unwrap();
        assert_eq!(luk.end(), (13, 2));
        let image = pi(&luk).unwrap();
        let expected = parse("U H D D H U U H H U H D D D D H H H U U U H D D H H D H");
        assert_eq!(image.steps, expected);
        assert_eq!(image.start, (-4, 4));
        assert_eq!(image.end(), (24, 2));
        assert_eq!(pi_inverse(&image).unwrap(), luk);
        let vs = VerblunskySequence::generic();
        assert_eq!(path_weight(&luk, &vs).unwrap(), path_weight(&image, &vs).unwrap());
    }

    #[test]
    fn pi_is_a_bijection_on_small_sets() {
        let vs = VerblunskySequence::generic();
        for (n, r, s) in [(3, 0, 0), (3, 1, 2), (4, 2, 1), (2, 3, 0)] {
            let luk = enumerate(Model::Lukasiewicz, n, r, s, 10_000).unwrap();
            let gm = enumerate(Model::GentleMotzkin, n, r, s, 10_000).unwrap();
            assert_eq!(luk.len(), gm.len());
            for p in &luk {
                let img = pi(p).unwrap();
                assert!(gm.contains(&img));
                assert_eq!(path_weight(p, &vs).unwrap(), path_weight(&img, &vs).unwrap());
            }
        }
    }

    #[test]
    fn grouping_covers_schroder_paths_and_preserves_weight() {
        let vs = VerblunskySequence::<Poly>::generic();
        for (n, r, s) in [(2, 0, 0), (3, 1, 1), (3, 0, 2)] {
            let groups = schroder_grouping(n, r, s, 10_000).unwrap();
            let total: usize = groups.iter().map(|g| g.members.len()).sum();
            assert_eq!(total, enumerate(Model::Schroder, n, r, s, 10_000).unwrap().len());
            assert!(groups.iter().all(|g| !g.members.is_empty()));
            assert!(group_weights_match(&groups, &vs, 0.0).unwrap());
        }
    }

    #[test]
    fn pi_inverse_rejects_foreign_paths() {
        let p = LatticePath::new(Model::GentleMotzkin, (0, 0), vec![Step::Level]).unwrap();
        assert!(pi_inverse(&p).is_err());
    }
}
