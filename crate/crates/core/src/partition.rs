//! Set partitions as restricted growth strings.
//!
//! A string `a[0..n]` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])` encodes
//! the partition in which `i` and `j` share a class iff `a[i] == a[j]`.
//! [`Partitions`] walks the strings with exactly `k` distinct values in
//! lexicographic order.

#[derive(Clone, Debug)]
pub struct Partitions {
    n: usize,
    k: usize,
    rgs: Vec<u8>,
    /// `prefix_max[i] = max(rgs[..=i])`
    prefix_max: Vec<u8>,
    state: State,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Active,
    Done,
}

impl Partitions {
    /// Partitions of `0..n` into exactly `k` nonempty classes.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 255, "restricted growth strings are stored as u8");
        let feasible = (n == 0 && k == 0) || (k >= 1 && k <= n);
        Partitions {
            n,
            k,
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            state: if feasible { State::Fresh } else { State::Done },
        }
    }

    /// Fills `rgs[from..]` with the least tail reaching `k` classes.
    fn fill_from(&mut self, from: usize) {
        let mut m = if from == 0 { 0 } else { self.prefix_max[from - 1] as usize };
        let need = self.k - 1 - m.min(self.k - 1);
        let zeros_until = self.n - need;
        for j in from..self.n {
            if j == 0 {
                self.rgs[0] = 0;
            } else if j < zeros_until {
                self.rgs[j] = 0;
            } else {
                m += 1;
                self.rgs[j] = m as u8;
            }
            self.prefix_max[j] = if j == 0 {
                self.rgs[0]
            } else {
                self.prefix_max[j - 1].max(self.rgs[j])
            };
        }
    }

    /// Steps to the next string; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        match self.state {
            State::Done => return false,
            State::Fresh => {
                self.state = State::Active;
                if self.n > 0 {
                    self.fill_from(0);
                }
                return true;
            }
            State::Active => {}
        }
        for i in (1..self.n).rev() {
            let pm = self.prefix_max[i - 1];
            let a = self.rgs[i];
            if (a as usize) < self.k - 1 && a <= pm {
                self.rgs[i] = a + 1;
                self.prefix_max[i] = pm.max(a + 1);
                self.fill_from(i + 1);
                return true;
            }
        }
        self.state = State::Done;
        false
    }

    /// The current string; valid after `advance` returned `true`.
    pub fn current(&self) -> &[u8] {
        &self.rgs
    }
}

impl Iterator for Partitions {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        self.advance().then(|| self.rgs.clone())
    }
}
