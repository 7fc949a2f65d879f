//! Exact symmetric-function ground truth: Murnaghan-Nakayama characters,
//! Kronecker and Kostka numbers, Schur polynomials and `s_lam[xy]`.
//!
//! Nothing here looks at crystal operators or reading words, so the counts
//! produced on the crystal side can be checked against it.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::bitableau::for_each_bitableau_filling;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, multiplicities, Partition, WeightVector};
use crate::tableau::{count_ssyt_with_content, for_each_ssyt_filling};

/// A polynomial with integer coefficients in named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, i64>,
}

/// `prefix1, ..., prefix{n}`.
pub fn alphabet(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `x1..xn` followed by `y1..ym`.
pub fn xy_variables(n: usize, m: usize) -> Vec<String> {
    let mut v = alphabet("x", n);
    v.extend(alphabet("y", m));
    v
}

impl SymPoly {
    pub fn zero(variables: Vec<String>) -> Self {
        SymPoly {
            variables,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(variables: Vec<String>) -> Self {
        let mut p = SymPoly::zero(variables);
        let n = p.variables.len();
        p.terms.insert(vec![0; n], 1);
        p
    }

    pub fn from_terms(
        variables: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u32>, i64)>,
    ) -> Result<Self> {
        let mut p = SymPoly::zero(variables);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Nonzero terms keyed by exponent vector.
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: i64) -> Result<()> {
        if exponents.len() != self.variables.len() {
            return Err(Error::SizeMismatch(format!(
                "exponent vector of length {} for {} variables",
                exponents.len(),
                self.variables.len()
            )));
        }
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot
                    .get()
                    .checked_add(c)
                    .ok_or(Error::Overflow("polynomial coefficient"))?;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    fn same_ring(&self, other: &SymPoly) -> Result<()> {
        if self.variables != other.variables {
            return Err(Error::SizeMismatch(
                "polynomials live in different variables".into(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymPoly) -> Result<SymPoly> {
        self.checked_add(&other.scaled(-1)?)
    }

    pub fn scaled(&self, c: i64) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.variables.clone());
        for (e, &v) in &self.terms {
            out.add_term(
                e.clone(),
                v.checked_mul(c)
                    .ok_or(Error::Overflow("polynomial coefficient"))?,
            )?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &SymPoly) -> Result<SymPoly> {
        self.same_ring(other)?;
        let mut out = SymPoly::zero(self.variables.clone());
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(
                    e,
                    c1.checked_mul(c2)
                        .ok_or(Error::Overflow("polynomial coefficient"))?,
                )?;
            }
        }
        Ok(out)
    }

    /// Replaces variable `k` by the monomial with exponent vector
    /// `images[k]` over `new_variables`.
    pub fn substitute(&self, new_variables: Vec<String>, images: &[Vec<u32>]) -> Result<SymPoly> {
        if images.len() != self.variables.len()
            || images.iter().any(|im| im.len() != new_variables.len())
        {
            return Err(Error::SizeMismatch(
                "substitution images do not match the variables".into(),
            ));
        }
        let mut out = SymPoly::zero(new_variables);
        for (e, &c) in &self.terms {
            let mut image = vec![0u32; out.variables.len()];
            for (k, &power) in e.iter().enumerate() {
                for (slot, &x) in image.iter_mut().zip(&images[k]) {
                    *slot += power * x;
                }
            }
            out.add_term(image, c)?;
        }
        Ok(out)
    }

    /// Terms with the lexicographically largest exponent vector first.
    pub fn terms_descending(&self) -> impl Iterator<Item = (&Vec<u32>, &i64)> {
        self.terms.iter().rev()
    }
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [u32],
            coefficient: i64,
        }
        let terms: Vec<Term> = self
            .terms_descending()
            .map(|(e, &c)| Term {
                exponents: e,
                coefficient: c,
            })
            .collect();
        let mut st = s.serialize_struct("SymPoly", 2)?;
        st.serialize_field("variables", &self.variables)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, &c)) in self.terms_descending().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .zip(&self.variables)
                .filter(|(&p, _)| p > 0)
                .map(|(&p, v)| {
                    if p == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{p}")
                    }
                })
                .collect();
            let sign = if c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let abs = c.unsigned_abs();
            match (monomial.is_empty(), abs) {
                (true, _) => write!(f, "{abs}")?,
                (false, 1) => write!(f, "{}", monomial.join("*"))?,
                (false, _) => write!(f, "{abs}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `s_lam` in the given variables, summed over semistandard tableaux.
pub fn schur_poly(lam: &Partition, variables: &[String]) -> SymPoly {
    let n = variables.len();
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    for_each_ssyt_filling(lam, n as u32, |rows| {
        let mut e = vec![0u32; n];
        for &x in rows.iter().flatten() {
            e[x as usize - 1] += 1;
        }
        *acc.entry(e).or_insert(0) += 1;
    });
    SymPoly::from_terms(variables.to_vec(), acc).expect("exponent length is fixed")
}

/// `s_lam[xy]` via `s_lam(z)` over `nm` variables with `z_(i,j) = x_i y_j`,
/// streaming the substitution tableau by tableau.
pub fn kron_coproduct_by_substitution(lam: &Partition, n: usize, m: usize) -> Result<SymPoly> {
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    for_each_ssyt_filling(lam, (n * m) as u32, |rows| {
        let mut e = vec![0u32; n + m];
        for &z in rows.iter().flatten() {
            let z = z as usize - 1;
            e[z / m] += 1;
            e[n + z % m] += 1;
        }
        *acc.entry(e).or_insert(0) += 1;
    });
    SymPoly::from_terms(xy_variables(n, m), acc)
}

/// `s_lam[xy]` as `sum_T x^a(T) y^b(T)` over bitableaux.
pub fn kron_coproduct_by_bitableaux(lam: &Partition, n: usize, m: usize) -> Result<SymPoly> {
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    for_each_bitableau_filling(lam, n as u32, m as u32, |rows| {
        let mut e = vec![0u32; n + m];
        for p in rows.iter().flatten() {
            e[p.top as usize - 1] += 1;
            e[n + p.bottom as usize - 1] += 1;
        }
        *acc.entry(e).or_insert(0) += 1;
    });
    SymPoly::from_terms(xy_variables(n, m), acc)
}

/// `s_lam[xy]` in `x1..xn, y1..ym`, computed both ways; fails if the two
/// disagree in any term.
pub fn kron_coproduct_poly(lam: &Partition, n: usize, m: usize) -> Result<SymPoly> {
    let a = kron_coproduct_by_substitution(lam, n, m)?;
    let b = kron_coproduct_by_bitableaux(lam, n, m)?;
    if a != b {
        let diff = a.checked_sub(&b)?;
        return Err(Error::NotInSpan(format!(
            "substitution and bitableau sums differ by {diff}"
        )));
    }
    Ok(a)
}

/// Coefficients `c` with `p = sum c(mu, nu) s_mu(x) s_nu(y)`, where the first
/// `n_x` variables of `p` are the `x` alphabet.
///
/// Repeatedly removes the lexicographically leading term. A leading exponent
/// that is not a pair of partitions, or anything left over, means `p` is not
/// in the span.
pub fn expand_in_schur_schur(
    p: &SymPoly,
    n_x: usize,
) -> Result<BTreeMap<(Partition, Partition), i64>> {
    let vars = p.variables().to_vec();
    if n_x > vars.len() {
        return Err(Error::SizeMismatch(format!(
            "{n_x} x-variables among {}",
            vars.len()
        )));
    }
    let m = vars.len() - n_x;
    let x_images: Vec<Vec<u32>> = (0..n_x).map(|i| unit(vars.len(), i)).collect();
    let y_images: Vec<Vec<u32>> = (0..m).map(|j| unit(vars.len(), n_x + j)).collect();
    let mut basis: HashMap<(Partition, Partition), SymPoly> = HashMap::new();
    let mut residual = p.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = residual.terms().last_key_value() {
        let as_part = |e: &[u32]| Partition::new(e.iter().map(|&x| x as usize).collect()).ok();
        let (Some(mu), Some(nu)) = (as_part(&lead[..n_x]), as_part(&lead[n_x..])) else {
            return Err(Error::NotInSpan(format!(
                "leading exponent {lead:?} is not a pair of partitions"
            )));
        };
        let key = (mu.clone(), nu.clone());
        if !basis.contains_key(&key) {
            let sx = schur_poly(&mu, &alphabet("x", n_x)).substitute(vars.clone(), &x_images)?;
            let sy = schur_poly(&nu, &alphabet("y", m)).substitute(vars.clone(), &y_images)?;
            basis.insert(key.clone(), sx.checked_mul(&sy)?);
        }
        residual = residual.checked_sub(&basis[&key].scaled(c)?)?;
        out.insert(key, c);
    }
    Ok(out)
}

fn unit(len: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[k] = 1;
    v
}

/// Irreducible characters of `S_k` with centralizer orders.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    k: usize,
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    z: Vec<u128>,
}

impl CharacterTable {
    pub fn new(k: usize) -> Result<Self> {
        let partitions = enumerate_partitions(k, None);
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut values = vec![vec![0i64; partitions.len()]; partitions.len()];
        for (j, rho) in partitions.iter().enumerate() {
            let mut memo = HashMap::new();
            for (i, lam) in partitions.iter().enumerate() {
                values[i][j] = mn_memo(lam, rho, &mut memo)?;
            }
        }
        let z = partitions
            .iter()
            .map(centralizer_order)
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            k,
            partitions,
            index,
            values,
            z,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Partitions of `k` in reverse-lexicographic order; rows and columns of
    /// the table follow this order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn value(&self, lam: &Partition, rho: &Partition) -> Option<i64> {
        Some(self.values[*self.index.get(lam)?][*self.index.get(rho)?])
    }

    pub fn row(&self, lam: &Partition) -> Option<&[i64]> {
        Some(&self.values[*self.index.get(lam)?])
    }

    /// Centralizer order `z_rho`.
    pub fn z(&self, rho: &Partition) -> Option<u128> {
        Some(self.z[*self.index.get(rho)?])
    }

    pub fn z_values(&self) -> &[u128] {
        &self.z
    }
}

/// `z_rho = prod_i i^{m_i} m_i!`.
pub fn centralizer_order(rho: &Partition) -> Result<u128> {
    let mut z = 1u128;
    for (value, count) in multiplicities(rho) {
        for t in 1..=count {
            z = z
                .checked_mul(value as u128)
                .and_then(|z| z.checked_mul(t as u128))
                .ok_or(Error::Overflow("centralizer order"))?;
        }
    }
    Ok(z)
}

fn factorial(k: usize) -> Result<i128> {
    (1..=k as i128)
        .try_fold(1i128, |acc, x| acc.checked_mul(x))
        .ok_or(Error::Overflow("factorial"))
}

/// The cached character table of `S_k`.
pub fn character_table(k: usize) -> Result<Arc<CharacterTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&k) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(CharacterTable::new(k)?);
    Ok(Arc::clone(
        cache.lock().expect("cache lock").entry(k).or_insert(table),
    ))
}

fn check_sizes(parts: &[&Partition]) -> Result<usize> {
    let k = parts[0].size();
    if parts.iter().any(|p| p.size() != k) {
        let shown: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        return Err(Error::SizeMismatch(format!(
            "partitions {} have different sizes",
            shown.join(", ")
        )));
    }
    Ok(k)
}

/// `chi^lam(rho)` by the Murnaghan-Nakayama rule.
pub fn mn_character(lam: &Partition, rho: &Partition) -> Result<i64> {
    check_sizes(&[lam, rho])?;
    mn_memo(lam, rho, &mut HashMap::new())
}

/// Beads of the abacus of `lam` with `len(lam)` beads, as a bitmask.
fn beads(lam: &Partition) -> Result<u128> {
    let l = lam.len();
    let mut mask = 0u128;
    for (i, &part) in lam.parts().iter().enumerate() {
        let pos = part + l - 1 - i;
        if pos >= 128 {
            return Err(Error::Unsupported(format!(
                "partition {lam} too large for the bead mask"
            )));
        }
        mask |= 1 << pos;
    }
    Ok(mask)
}

/// `memo` is keyed by `(beads, depth)` and must only be shared between calls
/// with the same `rho`.
fn mn_memo(
    lam: &Partition,
    rho: &Partition,
    memo: &mut HashMap<(u128, usize), i64>,
) -> Result<i64> {
    fn go(
        mask: u128,
        rho: &[usize],
        depth: usize,
        memo: &mut HashMap<(u128, usize), i64>,
    ) -> Result<i64> {
        if depth == rho.len() {
            return Ok(1);
        }
        if let Some(&v) = memo.get(&(mask, depth)) {
            return Ok(v);
        }
        let r = rho[depth];
        let mut total = 0i64;
        for b in r..128 {
            if mask & (1 << b) == 0 || mask & (1 << (b - r)) != 0 {
                continue;
            }
            // Beads strictly between b - r and b.
            let between = (mask >> (b - r + 1)) & ((1u128 << (r - 1)) - 1);
            let sign = if between.count_ones() % 2 == 0 { 1 } else { -1 };
            let next = (mask & !(1 << b)) | (1 << (b - r));
            let sub = go(next, rho, depth + 1, memo)?;
            total = total
                .checked_add(sign * sub)
                .ok_or(Error::Overflow("character value"))?;
        }
        memo.insert((mask, depth), total);
        Ok(total)
    }
    go(beads(lam)?, rho.parts(), 0, memo)
}

/// `g(lam, mu, nu) = sum_rho chi^lam chi^mu chi^nu (rho) / z_rho`.
pub fn kronecker_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let k = check_sizes(&[lam, mu, nu])?;
    let table = character_table(k)?;
    let kfact = factorial(k)?;
    let (a, b, c) = (
        table.row(lam).unwrap(),
        table.row(mu).unwrap(),
        table.row(nu).unwrap(),
    );
    let mut sum = 0i128;
    for (idx, &z) in table.z_values().iter().enumerate() {
        let class = kfact / z as i128;
        let term = [a[idx] as i128, b[idx] as i128, c[idx] as i128]
            .into_iter()
            .try_fold(class, |acc, x| acc.checked_mul(x))
            .ok_or(Error::Overflow("Kronecker character sum"))?;
        sum = sum
            .checked_add(term)
            .ok_or(Error::Overflow("Kronecker character sum"))?;
    }
    if sum < 0 || sum % kfact != 0 {
        return Err(Error::NotInSpan(format!(
            "character sum {sum} for ({lam},{mu},{nu}) is not a multiple of {k}!"
        )));
    }
    Ok((sum / kfact) as u64)
}

/// Number of semistandard tableaux of shape `lam` and content `mu`.
pub fn kostka(lam: &Partition, mu: &WeightVector) -> u64 {
    count_ssyt_with_content(lam, mu)
}

/// How [`monomial_coefficient_d`] computes its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DOracle {
    /// `sum_tau g(lam, tau, nu) K(tau, mu)` with `g` from characters.
    #[default]
    Characters,
    /// Same sum with `g` read off the Schur expansion of `s_lam[xy]`.
    SchurExpansion,
}

/// Coefficient of `m_mu` in `s_lam * s_nu`.
pub fn monomial_coefficient_d(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    oracle: DOracle,
) -> Result<u64> {
    let k = check_sizes(&[lam, mu, nu])?;
    let mu_w = mu.to_weight(mu.len()).unwrap();
    let mut total = 0u64;
    match oracle {
        DOracle::Characters => {
            for tau in enumerate_partitions(k, Some(mu.len())) {
                let g = kronecker_coefficient(lam, &tau, nu)?;
                if g != 0 {
                    total += g * kostka(&tau, &mu_w);
                }
            }
        }
        DOracle::SchurExpansion => {
            let (n, m) = (mu.len().max(1), nu.len().max(1));
            let expansion = expand_in_schur_schur(&kron_coproduct_by_substitution(lam, n, m)?, n)?;
            for ((tau, sigma), c) in expansion {
                if &sigma == nu {
                    let c = u64::try_from(c)
                        .map_err(|_| Error::NotInSpan(format!("negative coefficient {c}")))?;
                    total += c * kostka(&tau, &mu_w);
                }
            }
        }
    }
    Ok(total)
}
