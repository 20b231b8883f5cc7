//! Per-identity evaluation. Counts on the left come from enumeration, counts
//! on the right from closed forms or from a second, independent route.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{IdentityId, Instance};
use crate::bijections::{
    cyclic_class, designated_hump, dyck_representative, dyck_to_kary, hump_grow, hump_shrink, kary_to_dyck, phi,
    phi_hat, phi_hat_inverse, phi_inverse, prepend_up, psi_contract, psi_expand, strip_first_up,
};
use crate::enumerate::{
    count_family, generate_ka, generate_nm, total_humps, total_peaks, visit_nm, FamilySpec, KaFamily, NmFamily,
};
use crate::error::Result;
use crate::formulas::{binomial, d_nm_j, delta_divides, f_nm_j, f_ud_nm_j, kary_count, kary_peaks_count};
use crate::nm::NmWord;
use crate::path::{Classification, HorizontalWidth, PathProfile, PathWord};

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

fn super_count(profile: &PathProfile, order: u64) -> BigUint {
    count_family(&FamilySpec::ka(KaFamily::Super, profile, order))
}

fn nm_count(family: NmFamily, n: u64, m: u64, peaks: Option<usize>) -> usize {
    let mut count = 0;
    visit_nm(family, n, m, peaks, |_| count += 1);
    count
}

fn profile_of(inst: &Instance) -> Result<PathProfile> {
    match &inst.rises {
        Some(rises) => PathProfile::new(rises.iter().copied(), inst.a()),
        None => PathProfile::ka(inst.k(), inst.a()),
    }
}

/// `(k+1)·Σ #humps` against `|SP_n| − δ_{a|n}`.
fn hump_identity(profile: &PathProfile, k: u32, n: u64) -> (BigUint, BigUint) {
    let lhs = total_humps(profile, n) * (k + 1);
    let rhs = super_count(profile, n) - delta_divides(profile.horizontal(), n);
    (lhs, rhs)
}

/// `(k+1)·Σ #peaks` against `|SP_n| − |SP_{n−a}|`, the second term empty for `a = ∞` or `n < a`.
fn peak_identity(profile: &PathProfile, k: u32, n: u64) -> (BigUint, BigUint) {
    let lhs = total_peaks(profile, n) * (k + 1);
    let shorter = match profile.horizontal() {
        HorizontalWidth::Finite(a) if n >= u64::from(a) => super_count(profile, n - u64::from(a)),
        _ => BigUint::zero(),
    };
    (lhs, super_count(profile, n) - shorter)
}

fn is_positive_up_super(w: &PathWord) -> bool {
    w.is_super_positive_up()
}

fn is_super_with_up(w: &PathWord) -> bool {
    w.classify() != Classification::Invalid && w.has_up()
}

/// Both round trips of Φ over `{(strict word, hump)}` and `SP^U_n`.
fn phi_roundtrip(profile: &PathProfile, n: u64) -> Result<(BigUint, BigUint)> {
    let strict = generate_ka(profile, KaFamily::Strict, n, None);
    let targets = generate_ka(profile, KaFamily::SuperPositiveUp, n, None);

    let mut domain = 0usize;
    let mut good = 0usize;
    let mut images = HashSet::new();
    for w in &strict {
        for h in 0..w.humps()?.len() {
            domain += 1;
            let Ok((s, _)) = phi(w, h) else { continue };
            if !is_positive_up_super(&s) || !images.insert(s.clone()) {
                continue;
            }
            if matches!(phi_inverse(&s), Ok((back, i, _)) if back == *w && i == h) {
                good += 1;
            }
        }
    }
    for s in &targets {
        let Ok((w, h, _)) = phi_inverse(s) else { continue };
        if w.classify() == Classification::Strict && matches!(phi(&w, h), Ok((img, _)) if img == *s) {
            good += 1;
        }
    }
    Ok((big(good), big(domain + targets.len())))
}

/// Ψ-classes over `SP^U_n` against `SP^0_n`.
fn psi_partition(profile: &PathProfile, k: u32, n: u64) -> Result<(BigUint, BigUint)> {
    let reps = generate_ka(profile, KaFamily::SuperPositiveUp, n, None);
    let with_up = generate_ka(profile, KaFamily::SuperWithUp, n, None);

    let mut good = 0usize;
    for p in &reps {
        let Ok(class) = psi_expand(p) else { continue };
        let distinct: HashSet<&PathWord> = class.iter().collect();
        let ok = class.len() == k as usize + 1
            && distinct.len() == class.len()
            && class[0] == *p
            && class.iter().all(is_super_with_up)
            && class.iter().filter(|q| is_positive_up_super(q)).count() == 1
            && class.iter().all(|q| psi_contract(q).as_ref() == Ok(p));
        good += usize::from(ok);
    }
    for q in &with_up {
        let Ok(p) = psi_contract(q) else { continue };
        if is_positive_up_super(&p) && psi_expand(&p).is_ok_and(|class| class.contains(q)) {
            good += 1;
        }
    }
    Ok((big(good), big(reps.len() + with_up.len())))
}

/// `hump_shrink` from `SP^U_n` minus designated peaks onto `SP^U_{n−a}`.
fn shrink_bijection(profile: &PathProfile, n: u64) -> Result<(BigUint, BigUint)> {
    let a = u64::from(profile.horizontal().finite().expect("instances carry finite widths"));
    let source: Vec<PathWord> = generate_ka(profile, KaFamily::SuperPositiveUp, n, None)
        .into_iter()
        .filter(|s| designated_hump(s).is_ok_and(|h| !h.is_peak()))
        .collect();
    let target = if n >= a { generate_ka(profile, KaFamily::SuperPositiveUp, n - a, None) } else { Vec::new() };

    let mut good = 0usize;
    let mut images = HashSet::new();
    for s in &source {
        let Ok(t) = hump_shrink(s) else { continue };
        let ok = is_positive_up_super(&t) && t.order() + a == n && hump_grow(&t).as_ref() == Ok(s) && images.insert(t);
        good += usize::from(ok);
    }
    for t in &target {
        let Ok(s) = hump_grow(t) else { continue };
        let ok = is_positive_up_super(&s)
            && designated_hump(&s).is_ok_and(|h| !h.is_peak())
            && hump_shrink(&s).as_ref() == Ok(t);
        good += usize::from(ok);
    }
    Ok((big(good), big(source.len() + target.len())))
}

/// Class size, the unique Dyck member, and constancy of the representative,
/// for every free `(n,m)`-word.
fn lemma2_class(n: u64, m: u64) -> Result<(BigUint, BigUint)> {
    let len = (n + m) as usize;
    let mut good = 0usize;
    for w in generate_nm(NmFamily::Free, n, m, None) {
        let class = cyclic_class(&w)?;
        let dyck: Vec<&NmWord> = class.members.iter().map(|(_, p)| p).filter(|p| p.is_dyck()).collect();
        let (rep, offset) = dyck_representative(&w)?;
        let ok = class.len() == len
            && dyck.len() == 1
            && *dyck[0] == rep
            && w.rotated(offset) == rep
            && class.members.iter().all(|(_, p)| dyck_representative(p).is_ok_and(|(r, _)| r == rep));
        good += usize::from(ok);
    }
    Ok((big(good), binomial((n + m) as i64, n as i64)))
}

/// Both round trips of Φ̂ between peak-marked Dyck words with `j` peaks and `F^UD(n,m;j)`.
fn phihat_roundtrip(n: u64, m: u64, j: usize) -> Result<(BigUint, BigUint)> {
    let dyck = generate_nm(NmFamily::Dyck, n, m, Some(j));
    let free = generate_nm(NmFamily::FreeUd, n, m, Some(j));

    let mut good = 0usize;
    let mut images = HashSet::new();
    for p in &dyck {
        for i in 1..=j {
            let Ok(q) = phi_hat(p, i) else { continue };
            let ok = q.starts_up_ends_down()
                && q.peak_count() == j
                && phi_hat_inverse(&q).is_ok_and(|(back, idx)| back == *p && idx == i)
                && images.insert(q);
            good += usize::from(ok);
        }
    }
    for q in &free {
        let Ok((p, i)) = phi_hat_inverse(q) else { continue };
        let ok = p.is_dyck() && p.peak_count() == j && phi_hat(&p, i).as_ref() == Ok(q);
        good += usize::from(ok);
    }
    Ok((big(good), big(dyck.len() * j + free.len())))
}

/// `(n, kn+1)`-Dyck ⇄ `(n, kn)`-Dyck ⇄ `k`-ary paths, both directions, peaks preserved.
fn lemma4_chain(k: u32, n: u64) -> Result<(BigUint, BigUint)> {
    let kn = u64::from(k) * n;
    let outer = generate_nm(NmFamily::Dyck, n, kn + 1, None);
    let middle = generate_nm(NmFamily::Dyck, n, kn, None);
    let kary = generate_ka(&PathProfile::kary(k)?, KaFamily::Strict, (u64::from(k) + 1) * n, None);

    let mut good = 0usize;
    for w in &outer {
        let ok = strip_first_up(w)
            .is_ok_and(|s| s.is_dyck() && s.m() == kn && s.peak_count() == w.peak_count() && prepend_up(&s) == *w);
        good += usize::from(ok);
    }
    for s in &middle {
        let up = prepend_up(s);
        let ok = up.is_dyck() && strip_first_up(&up).as_ref() == Ok(s);
        let to_kary = dyck_to_kary(s).is_ok_and(|p| {
            p.classify() == Classification::Strict
                && p.peaks().is_ok_and(|pk| pk.len() == s.peak_count())
                && kary_to_dyck(&p).as_ref() == Ok(s)
        });
        good += usize::from(ok) + usize::from(to_kary);
    }
    for p in &kary {
        let ok = kary_to_dyck(p).is_ok_and(|s| s.is_dyck() && dyck_to_kary(&s).as_ref() == Ok(p));
        good += usize::from(ok);
    }
    Ok((big(good), big(outer.len() + 2 * middle.len() + kary.len())))
}

pub(super) fn workload(id: IdentityId, inst: &Instance) -> Result<BigUint> {
    use IdentityId::*;
    Ok(match id {
        Eq2 => super_count(&PathProfile::kary(1)?, inst.n()),
        Eq3 => super_count(&PathProfile::ka(1, HorizontalWidth::Finite(1))?, inst.n()),
        Eq4 | Eq5 | Eq7 | PhiRoundtrip | PsiPartition | ShrinkBijection | SaCorollary => {
            super_count(&profile_of(inst)?, inst.n())
        }
        Eq8 | Eq9 | Eq10 | Eq11 | Lemma2Class | PhihatRoundtrip => {
            binomial((inst.n() + inst.m()) as i64, inst.n() as i64)
        }
        Eq12 | Eq13 | Lemma4Chain => {
            let (k, n) = (i64::from(inst.k()), inst.n() as i64);
            binomial((k + 1) * n + 1, n)
        }
    })
}

pub(super) fn evaluate(id: IdentityId, inst: &Instance) -> Result<(BigUint, BigUint)> {
    use IdentityId::*;
    Ok(match id {
        Eq2 => peak_identity(&PathProfile::kary(1)?, 1, inst.n()),
        Eq3 => hump_identity(&PathProfile::ka(1, HorizontalWidth::Finite(1))?, 1, inst.n()),
        Eq4 => hump_identity(&profile_of(inst)?, inst.k(), inst.n()),
        Eq5 => peak_identity(&profile_of(inst)?, inst.k(), inst.n()),
        Eq7 => {
            let profile = profile_of(inst)?;
            let n = inst.n();
            let lhs = count_family(&FamilySpec::ka(KaFamily::SuperPositiveUp, &profile, n)) * (inst.k() + 1);
            (lhs, super_count(&profile, n) - delta_divides(profile.horizontal(), n))
        }
        Eq8 => {
            let (n, m) = (inst.n(), inst.m());
            (big(nm_count(NmFamily::Dyck, n, m, None)) * (n + m), binomial((n + m) as i64, n as i64))
        }
        Eq9 => {
            let (n, m, j) = (inst.n(), inst.m(), inst.j());
            (big(nm_count(NmFamily::Free, n, m, Some(j as usize))), f_nm_j(n, m, j))
        }
        Eq10 => {
            let (n, m, j) = (inst.n(), inst.m(), inst.j());
            (big(nm_count(NmFamily::FreeUd, n, m, Some(j as usize))), f_ud_nm_j(n, m, j))
        }
        Eq11 => {
            let (n, m, j) = (inst.n(), inst.m(), inst.j());
            (big(nm_count(NmFamily::Dyck, n, m, Some(j as usize))), d_nm_j(n, m, j)?)
        }
        Eq12 => {
            let (k, n) = (inst.k(), inst.n());
            let order = (u64::from(k) + 1) * n;
            let found = count_family(&FamilySpec::ka(KaFamily::Strict, &PathProfile::kary(k)?, order));
            (found, kary_count(u64::from(k), n))
        }
        Eq13 => {
            let (k, n, j) = (inst.k(), inst.n(), inst.j());
            let order = (u64::from(k) + 1) * n;
            let found = generate_ka(&PathProfile::kary(k)?, KaFamily::Strict, order, Some(j as usize));
            (big(found.len()), kary_peaks_count(u64::from(k), n, j))
        }
        Lemma2Class => lemma2_class(inst.n(), inst.m())?,
        PhiRoundtrip => phi_roundtrip(&profile_of(inst)?, inst.n())?,
        PhihatRoundtrip => phihat_roundtrip(inst.n(), inst.m(), inst.j() as usize)?,
        PsiPartition => psi_partition(&profile_of(inst)?, inst.k(), inst.n())?,
        ShrinkBijection => shrink_bijection(&profile_of(inst)?, inst.n())?,
        Lemma4Chain => lemma4_chain(inst.k(), inst.n())?,
        SaCorollary => {
            let profile = profile_of(inst)?;
            let n = inst.n();
            (total_humps(&profile, n), count_family(&FamilySpec::ka(KaFamily::SuperPositiveUp, &profile, n)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(k: u32, a: u32, n: u64) -> Instance {
        Instance { k: Some(k), a: Some(HorizontalWidth::Finite(a)), n: Some(n), ..Default::default() }
    }

    fn pair(id: IdentityId, i: &Instance) -> (u64, u64) {
        let (l, r) = evaluate(id, i).unwrap();
        (l.try_into().unwrap(), r.try_into().unwrap())
    }

    #[test]
    fn spot_values() {
        // 3·4 = 13 − 1 and 3·3 = 13 − 4
        assert_eq!(pair(IdentityId::Eq4, &inst(2, 1, 4)), (12, 12));
        assert_eq!(pair(IdentityId::Eq5, &inst(2, 1, 4)), (9, 9));
        // 2·3 = 7 − 1
        let n3 = Instance { n: Some(3), ..Default::default() };
        assert_eq!(pair(IdentityId::Eq3, &n3), (6, 6));
    }

    #[test]
    fn empty_order_peak_identity_is_off_by_one() {
        let n0 = Instance { n: Some(0), ..Default::default() };
        assert_eq!(pair(IdentityId::Eq2, &n0), (0, 1));
        assert_eq!(pair(IdentityId::Eq5, &inst(1, 1, 0)), (0, 1));
    }

    #[test]
    fn bijection_checks_small() {
        assert_eq!(pair(IdentityId::PhiRoundtrip, &inst(1, 1, 3)), (2 * 3, 2 * 3));
        let (l, r) = pair(IdentityId::PsiPartition, &inst(2, 1, 4));
        assert_eq!(l, r);
        let (l, r) = pair(IdentityId::ShrinkBijection, &inst(1, 2, 5));
        assert_eq!(l, r);
    }
}
