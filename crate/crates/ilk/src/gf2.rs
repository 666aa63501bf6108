//! Dense GF(2) linear algebra on bit-packed rows. Small systems, exact
//! answers: Gauss-Jordan elimination with deterministic pivoting (lowest
//! column first, first available row), tracking row combinations so that
//! an unsolvable system yields a checkable witness: a set of original
//! rows XORing to zero with odd right-hand-side sum.

/// A rows x cols bit matrix, row-major, 64 bits per word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words_per_row, bits: vec![0; rows * words_per_row] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.bits[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let word = &mut self.bits[r * self.words_per_row + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    pub fn row_weight(&self, r: usize) -> usize {
        let base = r * self.words_per_row;
        self.bits[base..base + self.words_per_row]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Matrix rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<u64>> = (0..self.rows).map(|r| self.row_words(r).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let (word, bit) = (col / 64, col % 64);
            let Some(pivot) = (rank..work.len()).find(|&r| work[r][word] >> bit & 1 == 1) else {
                continue;
            };
            work.swap(rank, pivot);
            for r in 0..work.len() {
                if r != rank && work[r][word] >> bit & 1 == 1 {
                    let (pr, tr) = split_rows(&mut work, rank, r);
                    xor_into(tr, pr);
                }
            }
            rank += 1;
        }
        rank
    }
}

fn xor_into(target: &mut [u64], source: &[u64]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t ^= s;
    }
}

/// Two disjoint mutable row references out of a row list.
fn split_rows(rows: &mut [Vec<u64>], a: usize, b: usize) -> (&[u64], &mut [u64]) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// Result of solving `A x = b` over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// One solution, free variables set to zero.
    Solution(Vec<bool>),
    /// Indices of original rows whose XOR is the zero vector while their
    /// right-hand sides XOR to one: a proof no solution exists.
    Inconsistent { combination: Vec<usize> },
}

/// Solves `matrix * x = rhs` over GF(2). Deterministic for fixed input.
///
/// # Panics
/// When `rhs.len() != matrix.rows()`.
pub fn solve(matrix: &BitMatrix, rhs: &[bool]) -> SolveOutcome {
    assert_eq!(rhs.len(), matrix.rows(), "one rhs bit per row");
    let n = matrix.rows();
    let track_words = n.div_ceil(64).max(1);
    // Work rows carry the coefficient bits, the rhs bit, and a bitset of
    // which original rows have been XORed into this one.
    let mut work: Vec<Vec<u64>> = (0..n).map(|r| matrix.row_words(r).to_vec()).collect();
    let mut b: Vec<bool> = rhs.to_vec();
    let mut track: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut t = vec![0u64; track_words];
            t[r / 64] |= 1 << (r % 64);
            t
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (work row, column)
    let mut next = 0;
    for col in 0..matrix.cols() {
        let (word, bit) = (col / 64, col % 64);
        let Some(pivot) = (next..n).find(|&r| work[r][word] >> bit & 1 == 1) else {
            continue;
        };
        work.swap(next, pivot);
        b.swap(next, pivot);
        track.swap(next, pivot);
        for r in 0..n {
            if r != next && work[r][word] >> bit & 1 == 1 {
                let (pr, tr) = split_rows(&mut work, next, r);
                xor_into(tr, pr);
                b[r] ^= b[next];
                let (pt, tt) = split_rows(&mut track, next, r);
                xor_into(tt, pt);
            }
        }
        pivots.push((next, col));
        next += 1;
    }

    // Rows past the pivots are zero in the coefficient part; any with a
    // set rhs bit certifies inconsistency.
    for r in next..n {
        if b[r] {
            let combination = (0..n).filter(|&i| track[r][i / 64] >> (i % 64) & 1 == 1).collect();
            return SolveOutcome::Inconsistent { combination };
        }
    }
    let mut x = vec![false; matrix.cols()];
    for &(row, col) in &pivots {
        x[col] = b[row];
    }
    SolveOutcome::Solution(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn matrix_from(rows: &[&[u8]]) -> (BitMatrix, usize) {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = BitMatrix::zero(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v == 1);
            }
        }
        (m, cols)
    }

    fn check_solution(m: &BitMatrix, rhs: &[bool], x: &[bool]) {
        for r in 0..m.rows() {
            let mut acc = false;
            for c in 0..m.cols() {
                acc ^= m.get(r, c) && x[c];
            }
            assert_eq!(acc, rhs[r], "row {r}");
        }
    }

    fn check_inconsistency(m: &BitMatrix, rhs: &[bool], combination: &[usize]) {
        assert!(!combination.is_empty());
        for c in 0..m.cols() {
            let parity = combination.iter().filter(|&&r| m.get(r, c)).count() % 2;
            assert_eq!(parity, 0, "combination must cancel column {c}");
        }
        let rhs_parity = combination.iter().filter(|&&r| rhs[r]).count() % 2;
        assert_eq!(rhs_parity, 1, "combination must have odd rhs sum");
    }

    fn brute_force_solvable(m: &BitMatrix, rhs: &[bool]) -> bool {
        assert!(m.cols() <= 20);
        (0u32..1 << m.cols()).any(|mask| {
            (0..m.rows()).all(|r| {
                let mut acc = false;
                for c in 0..m.cols() {
                    acc ^= m.get(r, c) && mask >> c & 1 == 1;
                }
                acc == rhs[r]
            })
        })
    }

    #[test]
    fn identity_and_zero_systems() {
        let (id, _) = matrix_from(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.rank(), 3);
        let rhs = [true, false, true];
        match solve(&id, &rhs) {
            SolveOutcome::Solution(x) => assert_eq!(x, vec![true, false, true]),
            other => panic!("expected solution, got {other:?}"),
        }

        let zero = BitMatrix::zero(2, 3);
        assert_eq!(zero.rank(), 0);
        match solve(&zero, &[false, true]) {
            SolveOutcome::Inconsistent { combination } => {
                assert_eq!(combination, vec![1]);
                check_inconsistency(&zero, &[false, true], &combination);
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
        match solve(&zero, &[false, false]) {
            SolveOutcome::Solution(x) => assert_eq!(x, vec![false; 3]),
            other => panic!("expected trivial solution, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_rows_with_conflicting_rhs() {
        let (m, _) = matrix_from(&[&[1, 1, 0], &[1, 1, 0]]);
        assert_eq!(m.rank(), 1);
        match solve(&m, &[true, false]) {
            SolveOutcome::Inconsistent { combination } => {
                assert_eq!(combination, vec![0, 1]);
                check_inconsistency(&m, &[true, false], &combination);
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn empty_dimensions() {
        let none = BitMatrix::zero(0, 5);
        assert_eq!(solve(&none, &[]), SolveOutcome::Solution(vec![false; 5]));
        let no_cols = BitMatrix::zero(2, 0);
        match solve(&no_cols, &[false, true]) {
            SolveOutcome::Inconsistent { combination } => {
                check_inconsistency(&no_cols, &[false, true], &combination)
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        // Column 70 forces a second word per row.
        let mut m = BitMatrix::zero(2, 80);
        m.set(0, 3, true);
        m.set(0, 70, true);
        m.set(1, 70, true);
        assert_eq!(m.rank(), 2);
        match solve(&m, &[true, true]) {
            SolveOutcome::Solution(x) => {
                check_solution(&m, &[true, true], &x);
                assert!(x[70] && !x[3]);
            }
            other => panic!("expected solution, got {other:?}"),
        }
    }

    #[test]
    fn agrees_with_brute_force_on_random_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..300 {
            let rows = rng.gen_range(0..=12);
            let cols = rng.gen_range(0..=13);
            let density = rng.gen_range(1..=9);
            let mut m = BitMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_range(0..10) < density {
                        m.set(r, c, true);
                    }
                }
            }
            let rhs: Vec<bool> = (0..rows).map(|_| rng.gen()).collect();
            let outcome = solve(&m, &rhs);
            assert_eq!(outcome, solve(&m, &rhs), "determinism, trial {trial}");
            match outcome {
                SolveOutcome::Solution(x) => {
                    check_solution(&m, &rhs, &x);
                    assert!(brute_force_solvable(&m, &rhs), "trial {trial}");
                }
                SolveOutcome::Inconsistent { combination } => {
                    check_inconsistency(&m, &rhs, &combination);
                    assert!(!brute_force_solvable(&m, &rhs), "trial {trial}");
                }
            }
        }
    }

    #[test]
    fn rank_matches_elimination_count_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let rows = rng.gen_range(1..=10);
            let cols = rng.gen_range(1..=10);
            let mut m = BitMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen() {
                        m.set(r, c, true);
                    }
                }
            }
            // Rank is invariant under transposition.
            let mut t = BitMatrix::zero(cols, rows);
            for r in 0..rows {
                for c in 0..cols {
                    t.set(c, r, m.get(r, c));
                }
            }
            assert_eq!(m.rank(), t.rank());
            assert!(m.rank() <= rows.min(cols));
        }
    }
}
