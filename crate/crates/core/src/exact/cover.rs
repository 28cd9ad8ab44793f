//! Exact minimum set cover over 64-bit element masks.

/// Drops every set strictly contained in another. Input sets must be distinct.
/// Returns the indices of the kept sets in input order.
pub(crate) fn maximal_sets(sets: &[u64]) -> Vec<usize> {
    (0..sets.len())
        .filter(|&i| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, &t)| j != i && t != sets[i] && sets[i] & t == sets[i])
        })
        .collect()
}

fn greedy(sets: &[u64], universe: u64) -> Vec<usize> {
    let mut left = universe;
    let mut out = Vec::new();
    while left != 0 {
        let (best, _) = sets
            .iter()
            .enumerate()
            .max_by_key(|&(i, &s)| ((s & left).count_ones(), std::cmp::Reverse(i)))
            .expect("caller checked coverability");
        out.push(best);
        left &= !sets[best];
    }
    out
}

/// Fewest sets whose union contains `universe`, or `None` if the union of all
/// sets does not. Ties are broken deterministically by set order.
pub(crate) fn min_set_cover(sets: &[u64], universe: u64) -> Option<Vec<usize>> {
    let union = sets.iter().fold(0u64, |a, &s| a | s);
    if universe & !union != 0 {
        return None;
    }
    if universe == 0 {
        return Some(Vec::new());
    }
    let mut best = greedy(sets, universe);
    let mut chosen = Vec::new();
    branch(sets, universe, &mut chosen, &mut best);
    Some(best)
}

fn branch(sets: &[u64], uncovered: u64, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    if uncovered == 0 {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    let widest = sets.iter().map(|&s| (s & uncovered).count_ones()).max().unwrap_or(0);
    if widest == 0 {
        return;
    }
    let need = uncovered.count_ones().div_ceil(widest) as usize;
    if chosen.len() + need >= best.len() {
        return;
    }
    // Branch on the element covered by the fewest sets.
    let mut pick = None;
    let mut fewest = usize::MAX;
    let mut rest = uncovered;
    while rest != 0 {
        let e = rest.trailing_zeros();
        rest &= rest - 1;
        let c = sets.iter().filter(|&&s| s >> e & 1 == 1).count();
        if c < fewest {
            fewest = c;
            pick = Some(e);
        }
    }
    let e = pick.expect("uncovered is nonempty");
    let mut options: Vec<usize> = (0..sets.len()).filter(|&i| sets[i] >> e & 1 == 1).collect();
    options.sort_by_key(|&i| (std::cmp::Reverse((sets[i] & uncovered).count_ones()), i));
    for i in options {
        chosen.push(i);
        branch(sets, uncovered & !sets[i], chosen, best);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(sets: &[u64], universe: u64) -> Option<usize> {
        (0u32..1 << sets.len())
            .filter(|pick| {
                let u = (0..sets.len()).filter(|&i| pick >> i & 1 == 1).fold(0, |a, i| a | sets[i]);
                u & universe == universe
            })
            .map(|p| p.count_ones() as usize)
            .min()
    }

    #[test]
    fn small_examples() {
        assert_eq!(min_set_cover(&[0b011, 0b110, 0b100], 0b111).unwrap().len(), 2);
        assert_eq!(min_set_cover(&[0b01], 0b11), None);
        assert_eq!(min_set_cover(&[], 0), Some(vec![]));
        assert_eq!(maximal_sets(&[0b01, 0b11, 0b100]), vec![1, 2]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(sets in prop::collection::vec(0u64..256, 1..10)) {
            let universe = 0xff;
            let got = min_set_cover(&sets, universe);
            let want = brute_force(&sets, universe);
            prop_assert_eq!(got.as_ref().map(|c| c.len()), want);
            if let Some(c) = got {
                let u = c.iter().fold(0, |a, &i| a | sets[i]);
                prop_assert_eq!(u & universe, universe);
            }
        }
    }
}
