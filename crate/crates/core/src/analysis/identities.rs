//! Replays the concrete identities used in the induction for `M_n`.

use serde::{Deserialize, Serialize};

use crate::analysis::normal_forms::enumerate_normal_forms;
use crate::catalog::{build_mn, A, B, C, D};
use crate::error::Result;
use crate::word::{Element, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    /// The identity as an equation, e.g. `daab = 1`.
    pub identity: String,
    /// Normal form actually computed for the left side.
    pub computed: String,
    pub holds: bool,
}

/// Longest sampled `U` in the `U d a^p c^(p+1) = U` family.
const SAMPLE_LEN: usize = 3;

pub fn verify_paper_identities(n: usize) -> Result<Vec<IdentityCheck>> {
    let entry = build_mn(n)?;
    let s = entry.system();
    let a = s.alphabet().clone();
    let mut checks = Vec::new();
    let mut check = |lhs: Vec<Letter>, expected: Element| {
        let got = s.normalize(&lhs);
        checks.push(IdentityCheck {
            identity: format!("{} = {}", a.render(&lhs), a.render_element(&expected)),
            computed: a.render_element(&got),
            holds: got == expected,
        });
    };
    let pow = |l: Letter, k: usize| vec![l; k];

    for k in 0..n {
        check([vec![D], pow(A, k), vec![B]].concat(), Element::one());
    }
    check(vec![A, C], Element::one());
    check(vec![D, C], Element::one());
    for k in 0..=n {
        check([pow(A, k), pow(C, k)].concat(), Element::one());
    }
    for j in 0..=3 {
        check([pow(A, n + j), vec![B]].concat(), Element::Zero);
    }

    // U d a^p c^(p+1) = U, for normal forms U that stay normal followed by d a^p
    for u in enumerate_normal_forms(&s, SAMPLE_LEN) {
        for p in 0..=3 {
            let mut prefix = u.0.clone();
            prefix.push(D);
            prefix.extend(pow(A, p));
            if !s.is_normal(&prefix) {
                continue;
            }
            prefix.extend(pow(C, p + 1));
            check(prefix, Element::Word(u.clone()));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        for n in 1..=4 {
            let checks = verify_paper_identities(n).unwrap();
            assert!(checks.iter().all(|c| c.holds), "n = {n}");
            assert!(checks.len() > n + 8);
        }
    }

    #[test]
    fn named_instances() {
        let checks = verify_paper_identities(3).unwrap();
        let find = |id: &str| checks.iter().find(|c| c.identity == id).cloned();
        assert!(find("daab = 1").unwrap().holds);
        assert!(find("aaab = 0").unwrap().holds);
        let checks = verify_paper_identities(2).unwrap();
        let dacc = checks.iter().find(|c| c.identity == "dacc = 1").unwrap();
        assert_eq!(dacc.computed, "1");
        assert!(verify_paper_identities(0).is_err());
    }
}
