//! The two named groups: `𝒢_P̂T̂` generated by the spinor operators `P̂, T̂`
//! and `𝒢_PT` generated by the spacetime symmetries `P, T`.

use crate::cover::{parity_operator, UnitaryMat2};
use crate::error::{Error, Result};
use crate::pt::{time_reversal_operator, SpacetimeSymmetry};

use super::closure::{generate_closure, generate_spacetime_closure, Backend, ClosureOptions};
use super::FiniteGroup;

/// Canonical element order of `𝒢_P̂T̂`.
pub const GPT_HAT_LABELS: [&str; 8] = ["I", "P", "T", "PT", "-P", "-T", "-PT", "-I"];

/// Canonical element order of `𝒢_PT`.
pub const GPT_SPACETIME_LABELS: [&str; 4] = ["1", "P", "T", "PT"];

fn canonical(group: FiniteGroup, labels: &[&str], reps: &[String]) -> Result<FiniteGroup> {
    let order = reps
        .iter()
        .map(|r| group.index_of(r).ok_or_else(|| Error::InvalidTable(format!("`{r}` missing from closure"))))
        .collect::<Result<Vec<_>>>()?;
    group.reordered(&order)?.relabeled(labels.iter().map(|s| s.to_string()).collect())
}

/// `𝒢_P̂T̂ = ⟨P̂, T̂⟩`, exact, labeled `I, P, T, PT, -P, -T, -PT, -I`.
pub fn gpt_hat() -> Result<FiniteGroup> {
    let p = parity_operator();
    let t = time_reversal_operator();
    let pt = p.mul(&t);
    let group = generate_closure(
        &[p.matrix().clone(), t.matrix().clone()],
        Backend::Exact,
        ClosureOptions::default(),
    )?;
    let i = UnitaryMat2::identity();
    let reps: Vec<String> = [i.clone(), p.clone(), t.clone(), pt.clone(), p.neg(), t.neg(), pt.neg(), i.neg()]
        .iter()
        .map(|m| m.matrix().to_string())
        .collect();
    canonical(group, &GPT_HAT_LABELS, &reps)
}

/// `𝒢_PT = ⟨P, T⟩` on `O(3) × Z2`, labeled `1, P, T, PT`.
pub fn gpt_spacetime() -> Result<FiniteGroup> {
    let p = SpacetimeSymmetry::parity();
    let t = SpacetimeSymmetry::time_reversal();
    let pt = p.mul(&t);
    let group = generate_spacetime_closure(&[p.clone(), t.clone()], ClosureOptions::default())?;
    let reps: Vec<String> = [SpacetimeSymmetry::identity(), p, t, pt].iter().map(|s| s.to_string()).collect();
    canonical(group, &GPT_SPACETIME_LABELS, &reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(g: &FiniteGroup, a: &str, b: &str) -> String {
        g.label(g.mul(g.index_of(a).unwrap(), g.index_of(b).unwrap())).to_string()
    }

    #[test]
    fn gpt_hat_entries() {
        let g = gpt_hat().unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.identity(), 0);
        assert_eq!(product(&g, "P", "P"), "-I");
        assert_eq!(product(&g, "PT", "PT"), "I");
        assert_eq!(product(&g, "P", "T"), "PT");
        assert!(g.is_abelian());
    }

    #[test]
    fn gpt_spacetime_entries() {
        let g = gpt_spacetime().unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(product(&g, "P", "T"), "PT");
        assert_eq!(g.exponent(), 2);
        for l in GPT_SPACETIME_LABELS {
            assert_eq!(product(&g, l, l), "1");
        }
    }
}
