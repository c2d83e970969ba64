use super::config::Configuration;

/// `2p_i − p_{i−1} − p_{i+1} ≥ m_i^{(a−1)} − 2m_i^{(a)} + m_i^{(a+1)}` for
/// every level and every `i ≥ 1` up to one past the longest string.
pub fn vacancy_convexity_holds(c: &Configuration) -> bool {
    let top = c.max_length() + 1;
    (1..c.n).all(|a| {
        (1..=top).all(|i| {
            let lhs = 2 * c.vacancy(a, i) - c.vacancy(a, i - 1) - c.vacancy(a, i + 1);
            let rhs = c.m(a - 1, i) as i64 - 2 * c.m(a, i) as i64 + c.m(a + 1, i) as i64;
            lhs >= rhs
        })
    })
}

/// `2a_i ≥ a_{i−1} + a_{i+1}` on the interior.
pub fn is_concave(a: &[i64]) -> bool {
    a.windows(3).all(|w| 2 * w[1] >= w[0] + w[2])
}

/// For a concave sequence with non-negative ends, every entry is
/// non-negative. Returns `true` when the hypothesis fails.
pub fn concave_ends_bound_interior(a: &[i64]) -> bool {
    match (a.first(), a.last()) {
        (Some(&x), Some(&y)) if is_concave(a) && x >= 0 && y >= 0 => a.iter().all(|&v| v >= 0),
        _ => true,
    }
}
