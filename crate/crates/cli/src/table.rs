//! The table of `m_k(n)` for `n = 1..=max_n`. Sizes the search cannot
//! settle, either for lack of budget or because the board is beyond the
//! engine, are shown as brackets `[lower,upper]`.

use no3line::search::greedy_good;
use no3line::{lower_bound, solve_min_good, Error, Result, SearchConfig};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub n: i32,
    pub lower: usize,
    pub upper: usize,
}

impl TableEntry {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn cell(&self) -> String {
        if self.is_exact() {
            self.lower.to_string()
        } else {
            format!("[{},{}]", self.lower, self.upper)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub k: u32,
    pub entries: Vec<TableEntry>,
}

impl Table {
    /// Two aligned rows, `n` on top.
    pub fn render(&self) -> String {
        let head = ["n".to_string()]
            .into_iter()
            .chain(self.entries.iter().map(|e| e.n.to_string()));
        let body = [format!("m{}(n)", self.k)]
            .into_iter()
            .chain(self.entries.iter().map(TableEntry::cell));
        let (head, body): (Vec<_>, Vec<_>) = (head.collect(), body.collect());
        let widths: Vec<usize> = head
            .iter()
            .zip(&body)
            .map(|(a, b)| a.len().max(b.len()))
            .collect();
        let row = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join(" ")
                .trim_end()
                .to_string()
        };
        format!("{}\n{}", row(&head), row(&body))
    }
}

pub fn run_table(max_n: i32, config: &SearchConfig) -> Result<Table> {
    if max_n < 1 {
        return Err(Error::InvalidBoardSide(max_n));
    }
    config.validate()?;
    let mut entries = Vec::new();
    for n in 1..=max_n {
        let entry = match solve_min_good(n, config) {
            Ok(r) => TableEntry {
                n,
                lower: r.minimum,
                upper: r.minimum,
            },
            Err(Error::Unresolved { lower, upper, .. }) => TableEntry {
                n,
                lower,
                upper: upper.unwrap_or(lower),
            },
            Err(Error::UnsupportedBoard { .. }) => {
                let lower = if config.k == 3 { lower_bound(n)? } else { 1 };
                TableEntry {
                    n,
                    lower,
                    upper: greedy_good(n, config.k)?.len(),
                }
            }
            Err(e) => return Err(e),
        };
        entries.push(entry);
    }
    Ok(Table {
        k: config.k,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let config = SearchConfig::default();
        let t = run_table(4, &config).unwrap();
        assert_eq!(
            t.entries.iter().map(|e| e.lower).collect::<Vec<_>>(),
            [1, 4, 4, 4]
        );
        assert!(t.entries.iter().all(TableEntry::is_exact));
        assert_eq!(t.render(), "    n 1 2 3 4\nm3(n) 1 4 4 4");
        assert_eq!(
            run_table(1, &config).unwrap().entries,
            [TableEntry {
                n: 1,
                lower: 1,
                upper: 1
            }]
        );
        assert!(run_table(0, &config).is_err());
    }

    #[test]
    fn brackets_when_budget_runs_out() {
        let config = SearchConfig {
            node_budget: Some(50),
            ..SearchConfig::default()
        };
        let t = run_table(6, &config).unwrap();
        let last = t.entries.last().unwrap();
        assert!(!last.is_exact());
        assert!(last.lower <= 6 && last.upper >= 6);
        assert!(t
            .render()
            .contains(&format!("[{},{}]", last.lower, last.upper)));
    }
}
