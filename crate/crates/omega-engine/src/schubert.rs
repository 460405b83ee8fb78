use num_bigint::BigInt;

use ferroni_paths::{count_paths, verts_of_chain, PathConstraint, PathProblem};
use matroid_core::{check_profile, SetChain};

use crate::Result;

/// `ω` of the Schubert matroid with lower profile `(S_•, a)`: the number of
/// Ferroni paths strictly below every point `(|S_i| - a_i, a_i)`.
pub fn omega_schubert(chain: &SetChain, a: &[usize]) -> Result<BigInt> {
    check_profile(chain, a)?;
    let n = chain.ground_size();
    let r = a[a.len() - 1];
    let constraints = verts_of_chain(chain, a)
        .expect("profile length was checked")
        .into_iter()
        .map(|(x, y)| PathConstraint::below(x, y))
        .collect();
    let count = count_paths(&PathProblem::new(n, r, constraints))
        .expect("points of a valid profile lie in range");
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroid_core::binomial;

    #[test]
    fn example_schubert_matroid() {
        let order: Vec<usize> = (0..10).collect();
        let chain = SetChain::initial_segments(&order, &[0, 2, 7, 10]).unwrap();
        assert_eq!(omega_schubert(&chain, &[0, 1, 3, 4]).unwrap(), 3.into());
    }

    #[test]
    fn trivial_chain_is_uniform() {
        let chain = SetChain::spanning(9, &[]).unwrap();
        assert_eq!(omega_schubert(&chain, &[0, 3]).unwrap(), BigInt::from(binomial(5, 2)));
    }

    #[test]
    fn a_loop_kills_every_path() {
        // a_1 = 0 on a nonempty S_1 makes S_1 loops
        let order: Vec<usize> = (0..6).collect();
        let chain = SetChain::initial_segments(&order, &[0, 1, 6]).unwrap();
        assert_eq!(omega_schubert(&chain, &[0, 0, 2]).unwrap(), 0.into());
    }
}
