//! Sign diagnostics and the serializable report of a full computation.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::Serialize;

use crate::algebra::{IntegerPolynomial, LaurentBivariate, UvRational};
use crate::error::Result;
use crate::newton::{MonomialSupport, RayReport, SupportComplex, Verdict};

use super::support_stildes;

fn ser_int<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&c.to_string()),
    }
}

struct Int<'a>(&'a BigInt);

impl Serialize for Int<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_int(self.0, s)
    }
}

/// `{"i,j": c}` in `(i + j, i)` order.
fn ser_laurent<S: Serializer>(p: &LaurentBivariate, s: S) -> std::result::Result<S::Ok, S::Error> {
    let terms = p.sorted_terms();
    let mut map = s.serialize_map(Some(terms.len()))?;
    for (i, j, c) in &terms {
        map.serialize_entry(&format!("{i},{j}"), &Int(c))?;
    }
    map.end()
}

fn ser_poly<S: Serializer>(p: &IntegerPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    let coeffs = p.to_vec();
    let mut seq = s.serialize_seq(Some(coeffs.len()))?;
    for c in &coeffs {
        seq.serialize_element(&Int(c))?;
    }
    seq.end()
}

fn ser_opt_laurent<S: Serializer>(p: &Option<LaurentBivariate>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => ser_laurent(p, s),
        None => s.serialize_none(),
    }
}

#[derive(Serialize)]
struct UvJson<'a> {
    #[serde(serialize_with = "ser_laurent")]
    num: &'a LaurentBivariate,
    /// coefficients of the denominator in `w = uv`
    #[serde(serialize_with = "ser_poly")]
    den: &'a IntegerPolynomial,
}

fn ser_opt_uv<S: Serializer>(p: &Option<UvRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(r) => UvJson { num: r.numerator(), den: r.denominator() }.serialize(s),
        None => s.serialize_none(),
    }
}

/// One coefficient `c_ij` and whether `(-1)^(i+j) c_ij >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignTerm {
    pub i: i64,
    pub j: i64,
    #[serde(serialize_with = "ser_int")]
    pub c: BigInt,
    pub sign_ok: bool,
    /// `i + j >= d`
    pub in_range: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignReport {
    pub d: i64,
    pub terms: Vec<SignTerm>,
}

impl SignReport {
    /// Every term with `i + j >= d` has the expected sign.
    pub fn ok_in_range(&self) -> bool {
        self.terms.iter().filter(|t| t.in_range).all(|t| t.sign_ok)
    }

    pub fn ok_everywhere(&self) -> bool {
        self.terms.iter().all(|t| t.sign_ok)
    }

    pub fn wrong_signs(&self) -> impl Iterator<Item = &SignTerm> {
        self.terms.iter().filter(|t| !t.sign_ok)
    }
}

/// Checks `(-1)^(i+j) c_ij >= 0` for every term, marking terms with
/// `i + j >= d`.
pub fn sign_report(e: &LaurentBivariate, d: i64) -> SignReport {
    let terms = e
        .sorted_terms()
        .into_iter()
        .map(|(i, j, c)| {
            let sign_ok = if (i + j) % 2 == 0 { !c.is_negative() } else { !c.is_positive() };
            SignTerm { i, j, c, sign_ok, in_range: i + j >= d }
        })
        .collect();
    SignReport { d, terms }
}

/// Comparison of `τ_{>(d - dim μ)/2}` of `S̃(P_μ, ℐ_μ)` and of `S̃(P_μ)`.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeEntry {
    /// vertices of `μ`, empty for `μ = ∅`
    pub mu: Vec<Vec<i64>>,
    pub dim: i64,
    #[serde(serialize_with = "ser_poly")]
    pub with_ideal: IntegerPolynomial,
    #[serde(serialize_with = "ser_poly")]
    pub plain: IntegerPolynomial,
    #[serde(serialize_with = "ser_poly")]
    pub truncated_with_ideal: IntegerPolynomial,
    #[serde(serialize_with = "ser_poly")]
    pub truncated_plain: IntegerPolynomial,
    /// truncated `with_ideal >= plain` coefficientwise
    pub holds: bool,
    pub equal: bool,
}

/// Experimental comparison over all `μ`, with `d = n - 1`. Nothing is
/// asserted.
pub fn conjecture_probe(sc: &SupportComplex) -> Result<Vec<ProbeEntry>> {
    let newton = &sc.fan.newton;
    let d = newton.n() as i64 - 1;
    let mut out = Vec::new();
    for (mu, dim, with_ideal, plain) in support_stildes(sc)? {
        let r = Rational64::new(d - dim, 2);
        let a = with_ideal.truncate_above(r);
        let b = plain.truncate_above(r);
        let mu_pts = match mu {
            None => Vec::new(),
            Some(m) => newton
                .face_points(m)
                .iter()
                .map(|v| v.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect())
                .collect(),
        };
        out.push(ProbeEntry {
            mu: mu_pts,
            dim,
            holds: b.coeffwise_le(&a),
            equal: a == b,
            with_ideal,
            plain,
            truncated_with_ideal: a,
            truncated_plain: b,
        });
    }
    Ok(out)
}

/// Everything the command line reports for one input.
#[derive(Clone, Debug, Serialize)]
pub struct StringyReport {
    pub input: MonomialSupport,
    pub classification: Verdict,
    pub crepant: bool,
    pub rays: Vec<RayReport>,
    pub convenient: bool,
    pub unique_max_compact_face: bool,
    #[serde(serialize_with = "ser_opt_laurent")]
    pub e_crepant: Option<LaurentBivariate>,
    #[serde(serialize_with = "ser_opt_uv")]
    pub e_general: Option<UvRational>,
    pub paths_agree: Option<bool>,
    pub signs: Option<SignReport>,
    pub note: &'static str,
}

pub const COEFFICIENT_NOTE: &str =
    "only the monomial support enters the computation; coefficients are assumed generic (nondegenerate)";
