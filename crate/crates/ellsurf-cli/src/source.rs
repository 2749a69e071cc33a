use exact_algebra::RatPoly;
use frobenius_counting::{charpoly_for, FrobeniusData};
use irreducibility::{CharPolySource, IrrError};
use std::collections::{BTreeMap, BTreeSet};
use surface_model::WeierstrassSurface;

/// Lazy characteristic-polynomial source backed by point counting: primes in
/// S yield None (bad prime); everything else is computed on first use and
/// cached, together with the raw counting data.
pub struct SurfaceSource {
    pub surface: WeierstrassSurface,
    pub s: BTreeSet<u64>,
    cache: BTreeMap<u64, (FrobeniusData, RatPoly)>,
}

impl SurfaceSource {
    pub fn new(surface: WeierstrassSurface, s: BTreeSet<u64>) -> Self {
        SurfaceSource {
            surface,
            s,
            cache: BTreeMap::new(),
        }
    }

    /// Counting data for a good prime (computing it if needed).
    pub fn data(&mut self, p: u64) -> irreducibility::Result<Option<&FrobeniusData>> {
        if self.s.contains(&p) {
            return Ok(None);
        }
        if !self.cache.contains_key(&p) {
            let (data, chp) = charpoly_for(&self.surface, p)
                .map_err(|e| IrrError::Source(format!("p = {p}: {e}")))?;
            self.cache.insert(p, (data, chp.q_poly));
        }
        Ok(self.cache.get(&p).map(|(d, _)| d))
    }

    /// All cached primes in order (for reporting).
    pub fn cached(&self) -> impl Iterator<Item = (u64, &RatPoly)> {
        self.cache.iter().map(|(&p, (_, q))| (p, q))
    }
}

impl CharPolySource for SurfaceSource {
    fn charpoly(&mut self, p: u64) -> irreducibility::Result<Option<RatPoly>> {
        self.data(p)?;
        Ok(self.cache.get(&p).map(|(_, q)| q.clone()))
    }
}
