//! Built-in reference data: the benchmark (mass, frequency) grid and the
//! per-point [7s:7s] basis exponents used by the `table-a1` basis mode.

use crate::mchf::GaussianBasis;

/// PCP masses of the benchmark grid (positron, fictitious, muon, proton).
pub const GRID_MASSES: [f64; 4] = [1.0, 10.0, 207.0, 1836.0];

/// Trap frequencies of the benchmark grid.
pub const GRID_OMEGAS: [f64; 6] = [0.0001, 0.01, 0.1, 1.0, 10.0, 100.0];

/// Exponent pairs `[electron, pcp]` for every grid point, mass-major and
/// frequency-ascending, seven s-functions per particle.
const BASIS_EXPONENTS: [[[f64; 2]; 7]; 24] = [
    [[0.007, 0.015], [0.01, 0.029], [0.014, 0.046], [0.024, 0.065], [0.032, 0.106], [0.056, 0.16], [0.11, 0.195]],
    [[0.012, 0.012], [0.021, 0.015], [0.033, 0.03], [0.05, 0.062], [0.093, 0.153], [0.208, 0.19], [0.27, 0.513]],
    [[0.053, 0.044], [0.074, 0.07], [0.121, 0.136], [0.155, 0.297], [0.422, 5.94], [0.515, 8.404], [0.664, 11.981]],
    [[0.465, 0.387], [0.542, 0.5], [0.764, 0.641], [1.004, 1.107], [1.932, 1.266], [3.817, 1.423], [5.42, 1.741]],
    [[4.765, 3.047], [5.125, 3.85], [7.982, 5.072], [19.734, 7.734], [36.104, 8.4], [59.889, 10.838], [73.122, 13.891]],
    [[39.372, 48.75], [44.683, 52.497], [51.76, 81.117], [127.57, 120.72], [165.38, 122.03], [346.08, 167.2], [402.56, 204.92]],
    [[0.023, 0.195], [0.025, 0.32], [0.044, 0.535], [0.087, 1.046], [0.176, 1.377], [0.371, 4.404], [0.806, 6.356]],
    [[0.035, 0.291], [0.045, 0.532], [0.066, 1.261], [0.132, 1.64], [0.227, 5.44], [0.414, 7.404], [0.868, 11.856]],
    [[0.046, 0.57], [0.073, 0.796], [0.078, 1.035], [0.144, 1.14], [0.289, 5.94], [0.614, 8.904], [1.328, 11.981]],
    [[0.441, 4.438], [0.569, 5.375], [1.004, 10.137], [2.153, 20.08], [4.763, 136.9], [7.338, 199.04], [13.339, 292.4]],
    [[4.96, 37.4], [5.125, 45.9], [8.104, 51.0], [18.269, 118.67], [47.628, 172.6], [251.25, 425.78], [567.7, 467.5]],
    [[37.907, 321.25], [40.289, 486.25], [51.76, 611.9], [120.98, 949.0], [316.3, 1359.0], [816.63, 1977.8], [1702.5, 2902.4]],
    [[0.056, 2.035], [0.128, 3.07], [0.291, 4.14], [0.667, 5.796], [1.523, 8.44], [3.337, 11.404], [6.866, 13.856]],
    [[0.057, 1.035], [0.129, 2.07], [0.291, 4.14], [0.663, 5.796], [1.512, 6.44], [3.333, 11.404], [6.958, 15.856]],
    [[0.078, 1.035], [0.144, 2.07], [0.289, 4.14], [0.614, 5.796], [1.422, 8.94], [3.698, 11.404], [10.765, 14.481]],
    [[0.441, 25.875], [0.569, 56.75], [1.004, 103.51], [2.255, 124.08], [5.838, 178.4], [17.339, 281.04], [61.67, 388.9]],
    [[5.125, 113.5], [5.253, 237.4], [8.104, 258.4], [18.269, 268.67], [48.8, 472.6], [151.25, 1017.5], [567.7, 1038.3]],
    [[37.419, 258.75], [38.824, 517.5], [51.76, 1035.0], [123.66, 1449.0], [349.99, 2484.0], [1152.6, 10086.0], [4702.5, 10353.0]],
    [[0.057, 2.035], [0.129, 3.07], [0.291, 4.14], [0.667, 5.796], [1.624, 8.94], [4.485, 12.404], [14.304, 20.856]],
    [[0.057, 1.035], [0.129, 2.07], [0.289, 4.14], [0.669, 5.796], [1.656, 6.94], [4.665, 13.654], [15.364, 22.544]],
    [[0.07, 1.035], [0.135, 2.07], [0.306, 4.14], [0.782, 5.796], [2.24, 8.94], [7.488, 11.404], [32.452, 94.481]],
    [[0.56, 25.875], [1.072, 56.75], [2.587, 103.51], [6.416, 174.08], [18.108, 328.4], [64.259, 913.9], [291.94, 931.04]],
    [[5.122, 113.5], [8.295, 268.67], [18.299, 862.4], [48.678, 1017.5], [157.11, 6508.4], [605.79, 8722.6], [2864.6, 9288.3]],
    [[31.622, 258.75], [39.372, 517.5], [51.775, 1035.0], [133.19, 1449.0], [421.28, 79047.0], [1634.0, 90086.0], [9241.6, 92853.0]],
];

/// Index into the grid tables for an exact (mass, omega) match.
pub fn grid_index(m_pcp: f64, omega: f64) -> Option<usize> {
    let mi = GRID_MASSES.iter().position(|&m| m == m_pcp)?;
    let oi = GRID_OMEGAS.iter().position(|&w| w == omega)?;
    Some(mi * GRID_OMEGAS.len() + oi)
}

/// Reference basis pair (electron, pcp) for a benchmark grid point, if the
/// parameters match one exactly.
pub fn builtin_basis(m_pcp: f64, omega: f64) -> Option<(GaussianBasis, GaussianBasis)> {
    let idx = grid_index(m_pcp, omega)?;
    let row = &BASIS_EXPONENTS[idx];
    let e: Vec<f64> = row.iter().map(|p| p[0]).collect();
    let p: Vec<f64> = row.iter().map(|p| p[1]).collect();
    Some((
        GaussianBasis::new(e).expect("reference exponents are positive"),
        GaussianBasis::new(p).expect("reference exponents are positive"),
    ))
}
