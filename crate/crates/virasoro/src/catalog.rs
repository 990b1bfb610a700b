use serde::{Deserialize, Serialize};

use virasoro_core::wzw::{simple_lie_data, Series, SimpleLieAlgebra};
use virasoro_core::Error;

/// One `{"series": "A", "rank": 2, "level": 3}` record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub series: Series,
    pub rank: u32,
    pub level: u64,
}

impl CatalogEntry {
    pub fn resolve(&self) -> Result<(SimpleLieAlgebra, u64), Error> {
        if self.level < 1 {
            return Err(Error::InvalidParameter(format!("level {} must be ≥ 1", self.level)));
        }
        Ok((simple_lie_data(self.series, self.rank)?, self.level))
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<(SimpleLieAlgebra, u64)>, crate::CliError> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(text)?;
    Ok(entries.iter().map(CatalogEntry::resolve).collect::<Result<_, _>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let cat = parse_catalog(r#"[{"series": "A", "rank": 2, "level": 3}, {"series": "E8", "rank": 8, "level": 1}]"#)
            .unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat[0].0.dim, 8);
        assert!(parse_catalog(r#"[{"series": "B", "rank": 1, "level": 1}]"#).is_err());
        assert!(parse_catalog(r#"[{"series": "A", "rank": 1, "level": 0}]"#).is_err());
        assert!(parse_catalog(r#"[{"series": "Q", "rank": 1, "level": 1}]"#).is_err());
        assert!(parse_catalog(r#"[]"#).unwrap().is_empty());
    }
}
