//! Permutations on points 0..n-1.
//!
//! Products use the "apply left, then right" convention: `(a.mul(&b))(x) =
//! b(a(x))`, so right coset and right regular actions come out as genuine
//! homomorphisms.

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Perm {
    img: Vec<u16>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { img: (0..n as u16).collect() }
    }

    pub fn from_images(img: Vec<u16>) -> Perm {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            assert!((x as usize) < img.len() && !seen[x as usize], "not a bijection");
            seen[x as usize] = true;
        }
        Perm { img }
    }

    /// Build from disjoint cycles over 0-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Perm {
        let mut img: Vec<u16> = (0..n as u16).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                assert!(from < n && to < n);
                img[from] = to as u16;
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.img
    }

    /// Apply `self` first, then `rhs`.
    pub fn mul(&self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm { img: self.img.iter().map(|&x| rhs.img[x as usize]).collect() }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            img[y as usize] = x as u16;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| x as u16 == y)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while !p.is_identity() {
            p = p.mul(self);
            n += 1;
        }
        n
    }

    pub fn pow(&self, k: usize) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Parity: true if even.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.img.len()];
        let mut transpositions = 0;
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    pub fn fixed_points(&self) -> usize {
        self.img.iter().enumerate().filter(|(x, &y)| *x as u16 == y).count()
    }

    /// Cycle notation over 1-based points, e.g. "(1,2,3)(4,5)".
    pub fn cycles_string(&self) -> String {
        let mut seen = vec![false; self.img.len()];
        let mut out = String::new();
        for start in 0..self.img.len() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&(x + 1).to_string());
                first = false;
                x = self.apply(x);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycles_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::from_cycles(3, &[&[0, 1]]);
        let b = Perm::from_cycles(3, &[&[1, 2]]);
        // apply a then b: 0 -> 1 -> 2
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(b.mul(&a).apply(0), 1);
    }

    #[test]
    fn inverse_and_order() {
        let c = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]);
        assert_eq!(c.order(), 5);
        assert!(c.mul(&c.inv()).is_identity());
        assert_eq!(c.pow(5), Perm::identity(5));
    }

    #[test]
    fn parity() {
        assert!(Perm::from_cycles(4, &[&[0, 1, 2]]).is_even());
        assert!(!Perm::from_cycles(4, &[&[0, 1]]).is_even());
        assert!(Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).is_even());
    }

    #[test]
    fn cycle_strings_are_one_based() {
        let c = Perm::from_cycles(5, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(c.cycles_string(), "(1,2)(3,4,5)");
        assert_eq!(Perm::identity(3).cycles_string(), "()");
    }
}
