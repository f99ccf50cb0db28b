use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is below the minimum {min} for {family}")]
    RankTooSmall { family: &'static str, rank: u8, min: u8 },
    #[error("element not in B_{l}: {detail}")]
    NotInCrystal { l: u16, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("no highest weight image for {0}")]
    MissingImage(String),
    #[error("not a soliton state: {0}")]
    NotSolitonState(String),
    #[error("carrier did not return to the vacuum within {0} extra sites")]
    CarrierOverflow(usize),
    #[error("operator applied outside its verified table: {0}")]
    OutsideTable(String),
    #[error("scattering did not complete within {0} steps")]
    NoCompletion(usize),
    #[error("conserved quantity is not an integer at l = {0}")]
    NonIntegralSpectrum(usize),
}
