use crate::{Result, VerifyError};

pub const DEFAULT_START_PRECISION: u32 = 128;
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

/// Precision escalation policy: start at `start` bits and double until a
/// decision is reached or `cap` is exceeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub start: u32,
    pub cap: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            start: DEFAULT_START_PRECISION,
            cap: DEFAULT_PRECISION_CAP,
        }
    }
}

impl Precision {
    pub fn new(start: u32, cap: u32) -> Self {
        Precision {
            start: start.min(cap).max(2),
            cap: cap.max(2),
        }
    }

    pub fn with_cap(cap: u32) -> Self {
        Self::new(DEFAULT_START_PRECISION, cap)
    }

    /// Runs `attempt` at increasing precision until it returns `Some`.
    ///
    /// Returns the decided value together with the precision that decided it.
    pub fn escalate<T>(
        &self,
        what: impl FnOnce() -> String,
        mut attempt: impl FnMut(u32) -> Result<Option<T>>,
    ) -> Result<(T, u32)> {
        let mut bits = self.start;
        loop {
            if let Some(v) = attempt(bits)? {
                return Ok((v, bits));
            }
            if bits >= self.cap {
                return Err(VerifyError::Undecidable {
                    what: what(),
                    cap_bits: self.cap,
                });
            }
            bits = (bits * 2).min(self.cap);
        }
    }
}
