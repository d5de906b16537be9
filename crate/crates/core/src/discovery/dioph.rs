use alloc::vec::Vec;

use num_integer::Integer;

use crate::factor::is_fourth_power_free;

/// Solutions of `b w^4 = 5 z^4` with `b <= b_max`, `1 <= z, w <= c_max`
/// and `gcd(z, w) = 1`, sorted by `(b, z, w)`. With `fourth_power_free`,
/// only bases free of fourth powers are kept.
pub fn dioph_scan(b_max: u64, c_max: u64, fourth_power_free: bool) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for z in 1..=c_max {
        let lhs = 5u128 * (z as u128).pow(4);
        for w in 1..=c_max {
            if z.gcd(&w) != 1 {
                continue;
            }
            let w4 = (w as u128).pow(4);
            if lhs % w4 != 0 {
                continue;
            }
            let b = lhs / w4;
            if b > b_max as u128 {
                continue;
            }
            let b = b as u64;
            if fourth_power_free && !is_fourth_power_free(b) {
                continue;
            }
            out.push((b, z, w));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn only_five() {
        assert_eq!(dioph_scan(500, 50, true), vec![(5, 1, 1)]);
        assert!(dioph_scan(4, 50, true).is_empty());
        assert_eq!(dioph_scan(80, 10, false), vec![(5, 1, 1), (80, 2, 1)]);
    }
}
