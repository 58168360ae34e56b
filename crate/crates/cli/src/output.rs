//! Output documents: canonical JSON and the prose rendering of the same data.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use smoothwm::rootdata::BasedRootDatum;
use smoothwm::smoothness::Verdict;
use smoothwm::sphericalroots::SphericalRoot;

#[derive(Clone, Debug, Serialize)]
pub struct ComponentDoc {
    #[serde(rename = "type")]
    pub simple_type: String,
    /// Simple-root indices in Bourbaki order.
    pub labeling: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceDoc {
    pub family: u8,
    pub params: Vec<usize>,
    pub label: String,
    pub embedding: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionsDoc {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateDoc {
    pub s_p: Vec<usize>,
    #[serde(rename = "sigma_N")]
    pub sigma_n: Vec<Vec<i64>>,
    pub s_gamma: Vec<usize>,
    /// Point of the valuation cone, positive exactly on `s_gamma`.
    pub s_gamma_witness: Vec<String>,
    pub restricted_coroots: Vec<Vec<Value>>,
    pub snf_divisors: Vec<Value>,
    pub violating_pairs: Vec<[usize; 2]>,
    pub admissible_sigma: Vec<Vec<i64>>,
    pub decomposition: Option<Vec<PieceDoc>>,
    pub conditions: ConditionsDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelDoc {
    #[serde(rename = "type")]
    pub type_string: String,
    pub isogeny: String,
    pub generators: Vec<Vec<i64>>,
    pub factor_rule: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OutputDocument {
    pub components: Vec<ComponentDoc>,
    pub g_saturated: bool,
    pub normal: bool,
    pub saturation_witness: Option<Vec<i64>>,
    pub smooth: Option<bool>,
    pub failed_conditions: Vec<String>,
    pub certificate: Option<CertificateDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelDoc>,
    pub timings_ms: Option<Value>,
}

fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn components(datum: &BasedRootDatum) -> Vec<ComponentDoc> {
    datum
        .components()
        .iter()
        .map(|c| ComponentDoc { simple_type: c.simple_type.to_string(), labeling: c.labeling.clone() })
        .collect()
}

impl OutputDocument {
    pub fn from_verdict(datum: &BasedRootDatum, v: &Verdict) -> Self {
        let certificate = v.certificate.as_ref().map(|c| CertificateDoc {
            s_p: c.s_p.clone(),
            sigma_n: c.sigma_n.iter().map(|s| s.coeffs.clone()).collect(),
            s_gamma: c.s_gamma.members.clone(),
            s_gamma_witness: c.s_gamma.combined.iter().map(|x| x.to_string()).collect(),
            restricted_coroots: c.restricted_coroots.iter().map(|r| r.iter().map(int).collect()).collect(),
            snf_divisors: c.condition_a.divisors.iter().map(int).collect(),
            violating_pairs: c.condition_b.violating_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            admissible_sigma: c.condition_c.sigma.clone(),
            decomposition: c.condition_c.decomposition.as_ref().map(|d| {
                d.pieces
                    .iter()
                    .map(|p| {
                        let (n, k) = p.params.parameters();
                        PieceDoc {
                            family: p.params.family_id(),
                            params: std::iter::once(n).chain(k).collect(),
                            label: p.params.to_string(),
                            embedding: p.embedding.clone(),
                        }
                    })
                    .collect()
            }),
            conditions: ConditionsDoc {
                a: c.condition_a.holds,
                b: c.condition_b.holds,
                c: c.condition_c.holds,
            },
        });
        OutputDocument {
            components: components(datum),
            g_saturated: v.g_saturated,
            normal: v.normal,
            saturation_witness: v.saturation_witness.clone(),
            smooth: v.smooth,
            failed_conditions: v.failed_conditions.iter().map(|c| c.as_str().to_string()).collect(),
            certificate,
            model: None,
            timings_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        render_json(self)
    }

    pub fn to_explain(&self) -> String {
        let mut out = String::new();
        let comps: Vec<String> =
            self.components.iter().map(|c| format!("{} on roots {}", c.simple_type, roots(&c.labeling))).collect();
        let _ = writeln!(out, "Group: {}", if comps.is_empty() { "torus".to_string() } else { comps.join(", ") });
        if let Some(m) = &self.model {
            let _ = writeln!(out, "Model monoid for {} ({}), generated by {}", m.type_string, m.isogeny, vectors(&m.generators));
        }
        let _ = writeln!(out, "G-saturated: {}", yes_no(self.g_saturated));
        let _ = writeln!(out, "Normal: {}", yes_no(self.normal));
        if let Some(w) = &self.saturation_witness {
            let _ = writeln!(out, "Dominant weight of ZΓ missing from Γ: {}", vector(w));
        }
        match &self.certificate {
            None => {
                let _ = writeln!(out, "No smoothness verdict: the criterion needs a G-saturated monoid.");
            }
            Some(c) => {
                let _ = writeln!(out, "S^p = {}", roots(&c.s_p));
                let _ = writeln!(out, "Σ^N = {}", vectors(&c.sigma_n));
                let _ = writeln!(out, "S_Γ = {} (witness {})", roots(&c.s_gamma), c.s_gamma_witness.join(" "));
                let coroots: Vec<String> = c.restricted_coroots.iter().map(|r| values(r)).collect();
                let _ = writeln!(out, "Restricted coroots: {}", coroots.join(" "));
                let _ = writeln!(
                    out,
                    "(a) part of a basis: {} (divisors {})",
                    holds(c.conditions.a),
                    values(&c.snf_divisors)
                );
                let pairs: Vec<String> = c.violating_pairs.iter().map(|p| format!("(α{}, α{})", p[0] + 1, p[1] + 1)).collect();
                let _ = writeln!(
                    out,
                    "(b) equal coroots have sums in ZΓ: {}{}",
                    holds(c.conditions.b),
                    if pairs.is_empty() { String::new() } else { format!(", violated by {}", pairs.join(", ")) }
                );
                let _ = writeln!(out, "(c) triple admissible: {} (Σ = {})", holds(c.conditions.c), vectors(&c.admissible_sigma));
                if let Some(pieces) = &c.decomposition {
                    for p in pieces {
                        let _ = writeln!(out, "    piece family {} {} on roots {}", p.family, p.label, roots(&p.embedding));
                    }
                }
            }
        }
        let verdict = match self.smooth {
            Some(true) => "smooth".to_string(),
            Some(false) => format!("not smooth (failed conditions: {})", self.failed_conditions.join(", ")),
            None => "undecided".to_string(),
        };
        let _ = writeln!(out, "Verdict: {verdict}");
        if let Some(Some(rule)) = self.model.as_ref().map(|m| m.factor_rule) {
            let _ = writeln!(out, "Factor rule (all factors of type A or C): {}", yes_no(rule));
        }
        if let Some(t) = &self.timings_ms {
            let _ = writeln!(out, "Timings (ms): {t}");
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootDoc {
    pub coeffs: Vec<i64>,
    pub pattern: String,
    pub support: Vec<usize>,
    pub display: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaScDocument {
    #[serde(rename = "type")]
    pub type_string: String,
    pub isogeny: String,
    pub components: Vec<ComponentDoc>,
    pub count: usize,
    pub roots: Vec<RootDoc>,
}

impl SigmaScDocument {
    pub fn new(type_string: String, isogeny: String, datum: &BasedRootDatum, roots: &[SphericalRoot]) -> Self {
        SigmaScDocument {
            type_string,
            isogeny,
            components: components(datum),
            count: roots.len(),
            roots: roots
                .iter()
                .map(|r| RootDoc {
                    coeffs: r.coeffs.clone(),
                    pattern: r.pattern.tag().to_string(),
                    support: r.support(),
                    display: r.display(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        render_json(self)
    }

    pub fn to_explain(&self) -> String {
        let mut out = format!("{} spherically closed spherical roots for {} ({}):\n", self.count, self.type_string, self.isogeny);
        for r in &self.roots {
            let _ = writeln!(out, "  {:<24} {}", r.display, r.pattern);
        }
        out
    }
}

/// Pretty JSON with lexicographically sorted keys.
pub fn render_json<T: Serialize>(doc: &T) -> String {
    // serde_json's default map is ordered by key.
    let value = serde_json::to_value(doc).expect("serializable document");
    let mut s = serde_json::to_string_pretty(&value).expect("serializable value");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn roots(idx: &[usize]) -> String {
    if idx.is_empty() {
        return "∅".into();
    }
    let parts: Vec<String> = idx.iter().map(|i| format!("α{}", i + 1)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn vector(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn vectors(v: &[Vec<i64>]) -> String {
    if v.is_empty() {
        return "∅".into();
    }
    format!("{{{}}}", v.iter().map(|x| vector(x)).collect::<Vec<_>>().join(", "))
}

fn values(v: &[Value]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}
