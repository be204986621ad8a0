use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The closed roster of machine checks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CheckId {
    Thm2_2,
    Thm2_3,
    Cor2_4,
    Thm2_6,
    Ex2_7,
    RemLowerDn,
    Lem1_3Terai,
    Lem1_7Ds,
    Lem1_8Lower,
    Lem2_1Restrict,
    Lem1_11Chamber,
    Thm3_4Ordmatch,
    RemCwEquality,
    OracleEq,
    HochsterN1,
    FakhariDiag,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::Thm2_2,
        CheckId::Thm2_3,
        CheckId::Cor2_4,
        CheckId::Thm2_6,
        CheckId::Ex2_7,
        CheckId::RemLowerDn,
        CheckId::Lem1_3Terai,
        CheckId::Lem1_7Ds,
        CheckId::Lem1_8Lower,
        CheckId::Lem2_1Restrict,
        CheckId::Lem1_11Chamber,
        CheckId::Thm3_4Ordmatch,
        CheckId::RemCwEquality,
        CheckId::OracleEq,
        CheckId::HochsterN1,
        CheckId::FakhariDiag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Thm2_2 => "THM_2_2",
            CheckId::Thm2_3 => "THM_2_3",
            CheckId::Cor2_4 => "COR_2_4",
            CheckId::Thm2_6 => "THM_2_6",
            CheckId::Ex2_7 => "EX_2_7",
            CheckId::RemLowerDn => "REM_LOWER_DN",
            CheckId::Lem1_3Terai => "LEM_1_3_TERAI",
            CheckId::Lem1_7Ds => "LEM_1_7_DS",
            CheckId::Lem1_8Lower => "LEM_1_8_LOWER",
            CheckId::Lem2_1Restrict => "LEM_2_1_RESTRICT",
            CheckId::Lem1_11Chamber => "LEM_1_11_CHAMBER",
            CheckId::Thm3_4Ordmatch => "THM_3_4_ORDMATCH",
            CheckId::RemCwEquality => "REM_CW_EQUALITY",
            CheckId::OracleEq => "ORACLE_EQ",
            CheckId::HochsterN1 => "HOCHSTER_N1",
            CheckId::FakhariDiag => "FAKHARI_DIAG",
        }
    }

    /// Recorded but never allowed to fail a run.
    pub fn is_report_only(self) -> bool {
        self == CheckId::FakhariDiag
    }

    /// Evaluated once per `n = 1..=n_max` (the others once per instance).
    pub fn is_per_n(self) -> bool {
        !matches!(
            self,
            CheckId::Lem1_3Terai | CheckId::Lem1_7Ds | CheckId::HochsterN1
        )
    }

    /// Needs a graph instance.
    pub fn is_graph_only(self) -> bool {
        matches!(
            self,
            CheckId::Lem1_8Lower | CheckId::Thm3_4Ordmatch | CheckId::RemCwEquality | CheckId::FakhariDiag
        )
    }

    /// Needs a graph or hypergraph instance.
    pub fn needs_hypergraph(self) -> bool {
        matches!(self, CheckId::Thm2_6 | CheckId::Lem1_7Ds)
    }

    /// Comma-separated names; `all` selects the whole roster.
    pub fn parse_list(s: &str) -> Result<BTreeSet<CheckId>> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(CheckId::ALL);
            } else {
                out.insert(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::Invalid("empty check list".into()));
        }
        Ok(out)
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
