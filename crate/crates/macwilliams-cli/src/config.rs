//! Configuration parsing: ring, code, and enumerator descriptions, plus
//! the string forms of partitions, weights, and rationals used on the
//! command line. JSON schemas are documented in `docs/formats.md`;
//! unknown fields are rejected. Arguments that take a description
//! accept inline JSON (anything starting with `{`) or a file path.

use std::collections::BTreeMap;
use std::fs;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use macwilliams_core::code::{code_from_generator, LinearCode};
use macwilliams_core::num::{BigInt, BigRational, Zero};
use macwilliams_core::partition::{AlphabetPartition, PartitionKind};
use macwilliams_core::weight::WeightKind;
use macwilliams_core::{Element, Ring};
use serde::{Deserialize, Serialize};

/// A ring description: GR(p^s, r), with the modulus polynomial `h` as a
/// coefficient list (constant term first, monic of degree r). `h` may be
/// omitted where a built-in default exists, and always for r = 1.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub p: u64,
    pub r: usize,
    pub s: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<u64>>,
}

impl RingSpec {
    pub fn build(&self) -> Result<Ring> {
        Ring::new(self.p, self.r, self.s, self.h.as_deref()).with_context(|| {
            format!(
                "invalid ring description p={} r={} s={}",
                self.p, self.r, self.s
            )
        })
    }

    pub fn describe(ring: &Ring) -> RingSpec {
        RingSpec {
            p: ring.p(),
            r: ring.r(),
            s: ring.s(),
            h: (ring.r() > 1).then(|| ring.modulus().to_vec()),
        }
    }
}

/// An alphabet element in a description: a plain integer (reduced into
/// the prime subring mod p^s — the natural form when r = 1) or a
/// coefficient list of length r, constant term first.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Scalar(u64),
    Coeffs(Vec<u64>),
}

impl ElementSpec {
    pub fn to_element(&self, ring: &Ring) -> Result<Element> {
        match self {
            ElementSpec::Scalar(v) => Ok(ring.scalar(*v)),
            ElementSpec::Coeffs(cs) => Ok(ring.element(cs)?),
        }
    }

    pub fn of(ring: &Ring, a: &Element) -> ElementSpec {
        if ring.r() == 1 {
            ElementSpec::Scalar(a.coeffs()[0])
        } else {
            ElementSpec::Coeffs(a.coeffs().to_vec())
        }
    }
}

/// A code description: ring, length, and generator rows. The code is
/// the row span; rows need not be independent.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub ring: RingSpec,
    pub n: usize,
    pub generators: Vec<Vec<ElementSpec>>,
}

impl CodeSpec {
    pub fn build(&self, guard: u64) -> Result<LinearCode> {
        let ring = self.ring.build()?;
        let mut rows = Vec::new();
        for (i, row) in self.generators.iter().enumerate() {
            if row.len() != self.n {
                bail!(
                    "generator row {i} has {} entries, expected n = {}",
                    row.len(),
                    self.n
                );
            }
            let row: Result<Vec<Element>> = row.iter().map(|e| e.to_element(&ring)).collect();
            rows.push(row?);
        }
        Ok(code_from_generator(&ring, self.n, &rows, guard)?)
    }

    pub fn describe(code: &LinearCode) -> CodeSpec {
        let ring = code.ring();
        CodeSpec {
            ring: RingSpec::describe(ring),
            n: code.length(),
            generators: code
                .generators()
                .iter()
                .map(|row| row.iter().map(|a| ElementSpec::of(ring, a)).collect())
                .collect(),
        }
    }
}

/// The enumerator document emitted by `enumerate --partition …` and
/// accepted back by `verify --precomputed`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct EnumeratorFile {
    pub partition: String,
    pub entries: Vec<EnumeratorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockDto>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct EnumeratorEntry {
    pub pi: Vec<u64>,
    pub count: u64,
}

/// One partition block: its label and its elements, in block order.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDto {
    pub label: String,
    pub elements: Vec<ElementSpec>,
}

pub fn block_listing(partition: &AlphabetPartition) -> Vec<BlockDto> {
    let ring = partition.ring();
    (0..partition.block_count())
        .map(|i| BlockDto {
            label: partition.block_label(i),
            elements: partition.blocks()[i]
                .iter()
                .map(|a| ElementSpec::of(ring, a))
                .collect(),
        })
        .collect()
}

/// Validates a precomputed enumerator against the partition it claims:
/// matching partition name, decompositions of the right shape, no
/// duplicates. Whether the counts belong to the code is the verifier's
/// business, not validation.
pub fn enumerator_counts(
    file: &EnumeratorFile,
    partition: &AlphabetPartition,
    n: usize,
) -> Result<BTreeMap<Vec<u64>, u64>> {
    let expected = partition_name(partition.kind());
    if file.partition != expected {
        bail!(
            "enumerator is for partition `{}`, expected `{expected}`",
            file.partition
        );
    }
    let mut counts = BTreeMap::new();
    for entry in &file.entries {
        if entry.pi.len() != partition.block_count() {
            bail!(
                "decomposition {:?} has {} entries, partition has {} blocks",
                entry.pi,
                entry.pi.len(),
                partition.block_count()
            );
        }
        if entry.pi.iter().sum::<u64>() != n as u64 {
            bail!("decomposition {:?} does not sum to n = {n}", entry.pi);
        }
        if counts.insert(entry.pi.clone(), entry.count).is_some() {
            bail!("duplicate decomposition {:?}", entry.pi);
        }
    }
    Ok(counts)
}

pub fn parse_partition(text: &str) -> Result<PartitionKind> {
    match text {
        "lee" => Ok(PartitionKind::LeeBlocks),
        "hamming" => Ok(PartitionKind::HammingPair),
        "hom" => Ok(PartitionKind::HomZUSR),
        "subfield" => Ok(PartitionKind::SubfieldOrbits),
        other => bail!("unknown partition `{other}` (expected lee, hamming, hom, or subfield)"),
    }
}

pub fn partition_name(kind: PartitionKind) -> &'static str {
    match kind {
        PartitionKind::LeeBlocks => "lee",
        PartitionKind::HammingPair => "hamming",
        PartitionKind::HomZUSR => "hom",
        PartitionKind::SubfieldOrbits => "subfield",
    }
}

/// `lee`, `hamming`, `homogeneous`, or `subfield[:<num>[/<den>]]` with
/// the scale λ defaulting to 2.
pub fn parse_weight(text: &str) -> Result<WeightKind> {
    match text {
        "lee" => Ok(WeightKind::Lee),
        "hamming" => Ok(WeightKind::Hamming),
        "homogeneous" => Ok(WeightKind::Homogeneous),
        "subfield" => Ok(WeightKind::subfield_default()),
        other => match other.strip_prefix("subfield:") {
            Some(lambda) => Ok(WeightKind::Subfield(parse_rational(lambda)?)),
            None => bail!(
                "unknown weight `{other}` (expected lee, hamming, homogeneous, \
                 or subfield:<num>[/<den>])"
            ),
        },
    }
}

pub fn weight_name(kind: &WeightKind) -> String {
    match kind {
        WeightKind::Lee => "lee".into(),
        WeightKind::Hamming => "hamming".into(),
        WeightKind::Homogeneous => "homogeneous".into(),
        WeightKind::Subfield(lambda) => format!("subfield:{lambda}"),
    }
}

/// `p` or `p/q` with arbitrary-precision parts.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num = BigInt::from_str(num).with_context(|| format!("bad rational `{text}`"))?;
    let den = BigInt::from_str(den).with_context(|| format!("bad rational `{text}`"))?;
    if den.is_zero() {
        bail!("bad rational `{text}`: zero denominator");
    }
    Ok(BigRational::new(num, den))
}

/// Loads a description from inline JSON or a file path.
pub fn load<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).with_context(|| format!("cannot read {what} file `{arg}`"))?
    };
    serde_json::from_str(&text).with_context(|| format!("invalid {what} description"))
}

/// The enumeration guard (element-count ceiling): the environment
/// variable `MACWILLIAMS_GUARD` overrides the library default.
pub fn guard_limit() -> Result<u64> {
    match std::env::var("MACWILLIAMS_GUARD") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .with_context(|| format!("MACWILLIAMS_GUARD must be an integer, got `{text}`")),
        Err(std::env::VarError::NotPresent) => Ok(macwilliams_core::DEFAULT_GUARD),
        Err(e) => Err(e).context("MACWILLIAMS_GUARD is not valid UTF-8"),
    }
}
