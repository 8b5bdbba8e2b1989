//! Test-only oracles. Nothing here calls into the library's class, subgroup
//! or enumeration code; they work straight off the multiplication table.

#![allow(dead_code)]

use std::collections::BTreeSet;

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All `k`-term unit-fraction decompositions of 1 (denominators descending,
/// list sorted ascending) by exhaustive search with the crude cap
/// `m ≤ j · den(r)`.
pub fn landau_oracle(k: usize) -> Vec<Vec<u128>> {
    fn walk(
        num: u128,
        den: u128,
        left: usize,
        min: u128,
        prefix: &mut Vec<u128>,
        out: &mut Vec<Vec<u128>>,
    ) {
        if left == 1 {
            if num == 1 && den >= min {
                let mut s = prefix.clone();
                s.push(den);
                s.reverse();
                out.push(s);
            }
            return;
        }
        for m in min.max(den / num + 1)..=(left as u128 * den) {
            let (n2, d2) = (num * m - den, den * m);
            let g = gcd(n2, d2);
            prefix.push(m);
            walk(n2 / g, d2 / g, left - 1, m, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(1, 1, k, 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Conjugacy classes from the raw table, by brute-force orbits.
pub fn classes_oracle(rows: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    let n = rows.len();
    let e = (0..n).find(|&e| (0..n).all(|j| rows[e][j] == j)).unwrap();
    let inv = |g: usize| (0..n).find(|&h| rows[g][h] == e).unwrap();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..n).map(|g| rows[rows[inv(g)][x]][g]).collect();
        for &y in &orbit {
            seen[y] = true;
        }
        out.push(orbit);
    }
    out
}

fn closed(rows: &[Vec<usize>], set: &BTreeSet<usize>) -> bool {
    set.iter()
        .all(|&a| set.iter().all(|&b| set.contains(&rows[a][b])))
}

/// `m(G)` under the universal reading: least `n` such that every union of
/// `n` non-identity classes plus the identity is product-closed. Subsets are
/// bitmasks over the non-identity classes.
pub fn m_oracle(rows: &[Vec<usize>]) -> Option<usize> {
    let n = rows.len();
    let e = (0..n).find(|&e| (0..n).all(|j| rows[e][j] == j)).unwrap();
    let classes: Vec<BTreeSet<usize>> = classes_oracle(rows)
        .into_iter()
        .filter(|c| !c.contains(&e))
        .collect();
    let r = classes.len();
    if r == 0 {
        return None;
    }
    (1..=r).find(|&size| {
        (0u32..1 << r)
            .filter(|mask| mask.count_ones() as usize == size)
            .all(|mask| {
                let mut set: BTreeSet<usize> = [e].into();
                for (i, c) in classes.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        set.extend(c);
                    }
                }
                closed(rows, &set)
            })
    })
}
