//! The lift `θ` of twists on `N_g` to the orientation double cover `S_{g-1}`.

use crate::error::{Error, Result};
use crate::surface::{check_genus_at_least, Generator, Surface, Word};

use super::symplectic::genus_split;

/// `θ(t)` as a word in twists on `S_{g-1}`:
///
/// * `t_{ε_i} -> t_{α_i} t_{α_{g-i}}^{-1}` for `i <= r`,
/// * `t_{δ_{2i}} -> t_{β_i} t_{β_{g-i}}^{-1}` for `i <= r`,
/// * `t_{δ_{2j+1}} -> t_{γ_j} t_{γ_{g-1-j}}^{-1}` for `2 <= 2j <= g-2`.
///
/// Since `δ_1 = ε_1`, `t_{δ_1}` uses the first rule.
pub fn theta_word(gen: Generator, g: usize) -> Result<Word> {
    check_genus_at_least(g, 3)?;
    Surface::closed(g).require(gen)?;
    let (r, _) = genus_split(g);
    let target = Surface::Orientable { genus: g - 1 };
    let pair = |x: Generator, y: Generator| Word::from_letters(target, [(x, 1), (y, -1)]);
    match gen {
        Generator::TEps(i) if i <= r => pair(Generator::TAlpha(i), Generator::TAlpha(g - i)),
        Generator::TDelta(1) => pair(Generator::TAlpha(1), Generator::TAlpha(g - 1)),
        Generator::TDelta(d) if d % 2 == 0 => {
            let i = d / 2;
            pair(Generator::TBeta(i), Generator::TBeta(g - i))
        }
        Generator::TDelta(d) => {
            let j = (d - 1) / 2;
            pair(Generator::TGamma(j), Generator::TGamma(g - 1 - j))
        }
        other => Err(Error::InvalidArgument(format!(
            "no lift of {other} to the double cover is available"
        ))),
    }
}

/// The twist generators of `N_g` that `theta_word` can lift.
pub fn liftable_twists(g: usize) -> Vec<Generator> {
    let (r, _) = genus_split(g);
    (1..=r)
        .map(Generator::TEps)
        .chain((1..g).map(Generator::TDelta))
        .collect()
}
