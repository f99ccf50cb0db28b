//! Type III through `C^(1)_n`: `omega` on `B_l`, `eta` on `B_1`, and the
//! identities relating the two automata.

use crate::algebra::{Algebra, Letter, TypeClass};
use crate::error::{Error, Result};
use crate::rmatrix::{eta, omega, r_general};
use crate::row::Row;
use crate::soliton::iota;

fn type_iii(alg: Algebra) -> Result<()> {
    if alg.type_class() == TypeClass::III {
        Ok(())
    } else {
        Err(Error::Unsupported("reductions are defined for Type III only"))
    }
}

/// `R` on `B_l (x) B_k` against `R` on `omega(b) (x) omega(c)`, energies included.
pub fn omega_equivariant(alg: Algebra, b: &Row, c: &Row) -> Result<bool> {
    type_iii(alg)?;
    let target = alg.omega_target()?;
    let (c2, b2, h) = r_general(alg, b, c)?;
    let (wc, wb, wh) = r_general(target, &omega(alg, b)?, &omega(alg, c)?)?;
    Ok(wc == omega(alg, &c2)? && wb == omega(alg, &b2)? && wh == h)
}

fn eta_word(alg: Algebra, word: &[Letter]) -> Result<Vec<Letter>> {
    let mut out = Vec::with_capacity(2 * word.len());
    for &a in word {
        out.extend(eta(alg, a)?);
    }
    Ok(out)
}

/// `(eta (x) omega) R (b (x) a)` against two `C^(1)_n` steps on `omega(b) (x) eta(a)`.
pub fn fact2(alg: Algebra, b: &Row, a: Letter) -> Result<bool> {
    type_iii(alg)?;
    let target = alg.omega_target()?;
    let (a2, b2, _) = r_general(alg, b, &Row::letter(alg, a)?)?;
    let want_letters = eta(alg, a2.as_letter(alg).expect("B_1 row is a letter"))?;
    let want_row = omega(alg, &b2)?;
    let [x, y] = eta(alg, a)?;
    let (x2, mid, _) = r_general(target, &omega(alg, b)?, &Row::letter(target, x)?)?;
    let (y2, end, _) = r_general(target, &mid, &Row::letter(target, y)?)?;
    let got = [x2.as_letter(target), y2.as_letter(target)];
    Ok(got == [Some(want_letters[0]), Some(want_letters[1])] && end == want_row)
}

/// `eta(iota_l(b)) (x) 1` against `iota~_2l(omega(b))` with the vacuum letter
/// placed after it when `l - s(b)` is even and before it otherwise.
pub fn fact3(alg: Algebra, b: &Row) -> Result<bool> {
    type_iii(alg)?;
    let low = alg.lowered()?;
    let target = alg.omega_target()?;
    let mut lhs = eta_word(alg, &iota(alg, b)?)?;
    lhs.push(Letter::Plain(1));
    let tilde = iota(target, &omega(low, b)?)?;
    let rhs: Vec<Letter> = if (b.l() - b.size()) % 2 == 0 {
        tilde.into_iter().chain([Letter::Plain(1)]).collect()
    } else {
        [Letter::Plain(1)].into_iter().chain(tilde).collect()
    };
    Ok(lhs == rhs)
}

/// Failures of [`fact2`] over `B_L (x) B_1`, `L <= lmax`, and the number of cases.
pub fn check_fact2(alg: Algebra, lmax: u16) -> Result<(usize, Vec<String>)> {
    let mut n = 0;
    let mut bad = Vec::new();
    for l in 1..=lmax {
        for b in Row::enumerate(alg, l) {
            for a in alg.letters() {
                n += 1;
                if !fact2(alg, &b, a)? {
                    bad.push(format!("{alg} {b} (x) {a}"));
                }
            }
        }
    }
    Ok((n, bad))
}

/// Failures of [`fact3`] over `B_l` of the lowered algebra, `l <= lmax`.
pub fn check_fact3(alg: Algebra, lmax: u16) -> Result<(usize, Vec<String>)> {
    let low = alg.lowered()?;
    let mut n = 0;
    let mut bad = Vec::new();
    for l in 1..=lmax {
        for b in Row::enumerate(low, l) {
            n += 1;
            if !fact3(alg, &b)? {
                bad.push(format!("{alg} {b}"));
            }
        }
    }
    Ok((n, bad))
}
