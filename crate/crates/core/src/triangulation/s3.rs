use std::fmt;

/// The symmetric group generated by the involutions `i` and `j`, with
/// `k = iji = jij`. Words compose as functions: `(ij)(x) = i(j(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum S3 {
    E,
    I,
    J,
    K,
    IJ,
    JI,
}

impl S3 {
    pub const ALL: [S3; 6] = [S3::E, S3::I, S3::J, S3::K, S3::IJ, S3::JI];

    // i swaps points 0 and 1, j swaps 1 and 2.
    fn perm(self) -> [u8; 3] {
        match self {
            S3::E => [0, 1, 2],
            S3::I => [1, 0, 2],
            S3::J => [0, 2, 1],
            S3::K => [2, 1, 0],
            S3::IJ => [1, 2, 0],
            S3::JI => [2, 0, 1],
        }
    }

    fn from_perm(p: [u8; 3]) -> S3 {
        *S3::ALL
            .iter()
            .find(|s| s.perm() == p)
            .expect("a permutation of three points")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn then_apply(self, other: S3) -> S3 {
        let (a, b) = (self.perm(), other.perm());
        S3::from_perm([a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]])
    }

    pub fn inverse(self) -> S3 {
        match self {
            S3::IJ => S3::JI,
            S3::JI => S3::IJ,
            s => s,
        }
    }

    /// Normal form of a word over `{i, j, k}` (`e` and the empty word are
    /// the identity).
    pub fn normalize(word: &str) -> Option<S3> {
        if word == "e" {
            return Some(S3::E);
        }
        word.chars().try_fold(S3::E, |acc, c| {
            let s = match c {
                'i' => S3::I,
                'j' => S3::J,
                'k' => S3::K,
                _ => return None,
            };
            Some(acc.then_apply(s))
        })
    }

    /// Letters applied from right to left, with `k` spelled `iji`.
    pub fn letters(self) -> &'static str {
        match self {
            S3::E => "",
            S3::I => "i",
            S3::J => "j",
            S3::K => "iji",
            S3::IJ => "ij",
            S3::JI => "ji",
        }
    }

    /// Like [`S3::letters`] but keeping `k` as a single letter.
    pub fn ops(self) -> &'static str {
        match self {
            S3::K => "k",
            s => s.letters(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            S3::E => "e",
            S3::I => "i",
            S3::J => "j",
            S3::K => "k",
            S3::IJ => "ij",
            S3::JI => "ji",
        }
    }
}

impl fmt::Display for S3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
