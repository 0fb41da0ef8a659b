//! The three worked-example models shipped in `corpus/`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::Hypernetwork;
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Bicycle, person and cyclist; `E1`.
    Bicycle,
    /// Fire, ambulance and police with a shared report; `E2`.
    Emergency,
    /// Predator, prey and habitat; `E3`.
    Ecology,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::Bicycle, Fixture::Emergency, Fixture::Ecology];

    pub fn code(self) -> &'static str {
        match self {
            Fixture::Bicycle => "E1",
            Fixture::Emergency => "E2",
            Fixture::Ecology => "E3",
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            Fixture::Bicycle => "bicycle.ht",
            Fixture::Emergency => "emergency.ht",
            Fixture::Ecology => "ecology.ht",
        }
    }

    /// The fixture source as compiled into the crate.
    pub fn source(self) -> &'static str {
        match self {
            Fixture::Bicycle => include_str!("../corpus/bicycle.ht"),
            Fixture::Emergency => include_str!("../corpus/emergency.ht"),
            Fixture::Ecology => include_str!("../corpus/ecology.ht"),
        }
    }

    pub fn load(self) -> Hypernetwork {
        text::parse(self.source())
            .unwrap_or_else(|e| panic!("fixture {} does not parse: {e}", self.file_name()))
    }

    /// Loads the fixture file from `dir` instead of the embedded copy.
    pub fn load_from(self, dir: impl AsRef<Path>) -> Result<Hypernetwork> {
        let path = dir.as_ref().join(self.file_name());
        let source = std::fs::read_to_string(&path)
            .map_err(|_| Error::FixtureMissing(path.display().to_string()))?;
        Ok(text::parse(&source)?)
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    /// Accepts `E1`..`E3` or the file stem (`bicycle`, `emergency`, `ecology`).
    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.code() == s || f.file_name().strip_suffix(".ht") == Some(s))
            .ok_or_else(|| Error::FixtureMissing(s.to_owned()))
    }
}

pub fn load_fixture(name: &str) -> Result<Hypernetwork> {
    Ok(name.parse::<Fixture>()?.load())
}
