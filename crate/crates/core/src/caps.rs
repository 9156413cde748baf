//! Size caps for the exponential routines.
//!
//! Defaults: 24 vertices for Hamiltonian paths and sun search, 12 for the
//! Hamiltonian-hereditary enumeration, sun size k <= 8. The `UBG_MAX_N`
//! environment variable overrides both vertex caps, clamped to 24.

use std::sync::OnceLock;

pub const HARD_MAX_N: usize = 24;
pub const SUN_MAX_K: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub exponential: usize,
    pub hereditary: usize,
    pub sun_k: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            exponential: HARD_MAX_N,
            hereditary: 12,
            sun_k: SUN_MAX_K,
        }
    }
}

impl Caps {
    pub fn from_env_value(value: Option<&str>) -> Caps {
        let mut caps = Caps::default();
        if let Some(n) = value.and_then(|v| v.trim().parse::<usize>().ok()) {
            let n = n.min(HARD_MAX_N);
            caps.exponential = n;
            caps.hereditary = n;
        }
        caps
    }
}

pub fn caps() -> Caps {
    static CAPS: OnceLock<Caps> = OnceLock::new();
    *CAPS.get_or_init(|| Caps::from_env_value(std::env::var("UBG_MAX_N").ok().as_deref()))
}
