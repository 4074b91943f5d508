//! Shared fixtures for unit tests: the worked ideals used across modules.

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub(crate) fn ideal_from(n: usize, rows: &[&[usize]]) -> MonomialIdeal {
    let gens = rows.iter().map(|r| Monomial::new(r.to_vec())).collect();
    MonomialIdeal::new(n, gens).unwrap()
}

pub(crate) fn exponent_rows(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

/// Seven generators in k[x,y,z]: x^3, x^2y, xy^3, y^5, y^4z^2, xy^2z^3,
/// x^2z^5. Strongly stable, with an infinite f_3 value at the tuple (0,3).
pub(crate) fn ex_2_6_1_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 2],
            &[1, 2, 3],
            &[2, 0, 5],
        ],
    )
}

/// x^2, xy^2, xyz^2: strongly stable but no pure power of y, so the level-2
/// index set is infinite.
pub(crate) fn ex_2_6_2_ideal() -> MonomialIdeal {
    ideal_from(3, &[&[2, 0, 0], &[1, 2, 0], &[1, 1, 2]])
}

/// Eight generators in k[x,y,z]: x^3, x^2y, xy^3, y^5, y^4z^2, xy^2z^2,
/// y^3z^3, x^2z^5. Strongly stable but not almost reverse lexicographic.
pub(crate) fn non_arl_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 2],
            &[1, 2, 2],
            &[0, 3, 3],
            &[2, 0, 5],
        ],
    )
}

/// x^3, x^2y, xy^3, y^5 in k[x,y]: realizes (1,2,3,2,1,0,...).
pub(crate) fn ex_3_9_2_ideal() -> MonomialIdeal {
    ideal_from(2, &[&[3, 0], &[2, 1], &[1, 3], &[0, 5]])
}

/// Eight generators in k[x,y,z] realizing (1,3,6,8,9,9,6,5,5,...).
pub(crate) fn ex_3_9_3_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 2],
            &[1, 2, 3],
            &[0, 3, 3],
            &[2, 0, 5],
        ],
    )
}

/// Thirteen generators in k[x,y,z] realizing the Froberg sequence
/// (1,3,6,8,9,8,6,3,1,0,...).
pub(crate) fn ex_4_6_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 1],
            &[1, 2, 3],
            &[0, 3, 3],
            &[2, 0, 5],
            &[1, 1, 5],
            &[0, 2, 5],
            &[1, 0, 7],
            &[0, 1, 7],
            &[0, 0, 9],
        ],
    )
}
