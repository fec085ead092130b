//! Rendering of the minimal resolution
//! 0 → ⊕ S(−e_j) → ⊕ S(1−d−d_i) → S(1−d)³ → S.

use std::collections::BTreeMap;
use std::fmt;

use super::SyzygyProfile;

/// Twists of the free modules, each term as (twist, rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    /// Modules from the left, omitting the final S.
    pub modules: Vec<Vec<(u32, usize)>>,
}

fn group(twists: impl IntoIterator<Item = u32>) -> Vec<(u32, usize)> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for t in twists {
        *counts.entry(t).or_insert(0) += 1;
    }
    counts.into_iter().rev().collect()
}

impl Resolution {
    pub fn from_profile(p: &SyzygyProfile) -> Self {
        let mut modules = Vec::new();
        if !p.second_syzygy_degrees.is_empty() {
            modules.push(group(p.second_syzygy_degrees.iter().copied()));
        }
        modules.push(group(p.generator_degrees.iter().map(|&di| di + p.d - 1)));
        modules.push(vec![(p.d - 1, 3)]);
        Resolution { modules }
    }

    /// `0 -> S(-14) -> S(-13)^2 + S(-12) -> S(-8)^3 -> S`.
    pub fn ascii(&self) -> String {
        self.render(" -> ", " + ", "-", |n| format!("^{n}"))
    }

    /// `0 → S(−14) → S(−13)² ⊕ S(−12) → S(−8)³ → S`.
    pub fn unicode(&self) -> String {
        self.render(" → ", " ⊕ ", "−", superscript)
    }

    /// Reads either rendering back. Ranks may also precede the twist, as in
    /// `S²(−13)`, and a module may be written without a twist as `S`.
    pub fn parse(s: &str) -> Option<Self> {
        let mut norm = String::with_capacity(s.len());
        let mut in_power = false;
        for c in s.replace('→', "->").replace('⊕', "+").replace('−', "-").chars() {
            match "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c) {
                Some(i) => {
                    if !in_power {
                        norm.push('^');
                    }
                    in_power = true;
                    norm.push(char::from(b'0' + i as u8));
                }
                None => {
                    in_power = false;
                    norm.push(c);
                }
            }
        }
        let mut parts: Vec<&str> = norm.split("->").map(str::trim).collect();
        if parts.len() < 3 || parts.first() != Some(&"0") || parts.last() != Some(&"S") {
            return None;
        }
        parts.remove(0);
        parts.pop();
        let mut modules = Vec::new();
        for part in parts {
            let mut terms = Vec::new();
            for term in part.split('+') {
                terms.push(parse_term(term.trim())?);
            }
            terms.sort_by(|a, b| b.cmp(a));
            modules.push(terms);
        }
        Some(Resolution { modules })
    }

    fn render(&self, arrow: &str, plus: &str, minus: &str, power: impl Fn(usize) -> String) -> String {
        let mut parts = vec!["0".to_string()];
        for module in &self.modules {
            let terms: Vec<String> = module
                .iter()
                .map(|&(twist, rank)| {
                    let base = if twist == 0 {
                        "S".to_string()
                    } else {
                        format!("S({minus}{twist})")
                    };
                    if rank == 1 {
                        base
                    } else {
                        base + &power(rank)
                    }
                })
                .collect();
            parts.push(terms.join(plus));
        }
        parts.push("S".to_string());
        parts.join(arrow)
    }
}

// "S", "S^2", "S(-13)", "S(-13)^2" or "S^2(-13)".
fn parse_term(t: &str) -> Option<(u32, usize)> {
    let rest = t.strip_prefix('S')?;
    let (mut rank, mut twist) = (None, 0u32);
    let mut rest = rest.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('^') {
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            if rank.is_some() {
                return None;
            }
            rank = Some(r[..end].parse().ok()?);
            rest = &r[end..];
        } else {
            let r = rest.strip_prefix("(-")?;
            let end = r.find(')')?;
            twist = r[..end].trim().parse().ok()?;
            rest = &r[end + 1..];
        }
    }
    Some((twist, rank.unwrap_or(1)))
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}
