#pragma once

// Reference values frozen from the independent high-precision script in
// oracles/oracles.py (mpmath + sympy). Profiles: gauss = exp(-r^2/2),
// tent = tent(1, 2, 1), tent10 = tent(1, 10, 1),
// mix = exp(-0.4 r^2) + 0.6 exp(-2.5 r^2).
namespace oracle {

inline constexpr double gauss_l2 = 2.3597304924146969;
inline constexpr double gauss_h1 = 2.890067818451249;
inline constexpr double gauss_hhalf = 2.5066282746310005;
inline constexpr double gauss_coulomb = 24.739429451193148;
inline constexpr double gauss_energy_s1 = 3.6505296447494837;
inline constexpr double gauss_l4 = 1.1845269712143392;
inline constexpr double gauss_J_s1_2p4 = 0.446845228234488;
inline constexpr double gauss_decay_s1_q2_a0 = 0.23225631957923633;
inline constexpr double gauss_ruiz_a1 = 4.2311675592726279;

inline constexpr double tent_l2 = 5.8607234774597928;
inline constexpr double tent_dirichlet = 10.435925705199619;
inline constexpr double tent_coulomb = 526.00291646186715;
inline constexpr double tent_hs_0_5 = 6.9067402339012433;
inline constexpr double tent_hs_0_6 = 7.3483197724353406;
inline constexpr double tent_hs_0_75 = 8.2099033764541112;
inline constexpr double tent_hs_0_9 = 9.3902221276462381;
inline constexpr double tent_ruiz_a1 = 14.043620968756223;

inline constexpr double tent10_hs_0_8 = 41.314294308484414;
inline constexpr double tent10_l2_am0_6 = 14.50841965783453;
inline constexpr double tent10_decay = 0.27658571574683139;

inline constexpr double mix_hs_0_6 = 3.2452321231970506;
inline constexpr double mix_hs_0_75 = 3.3739936331445674;
inline constexpr double mix_hs_0_9 = 3.5391655785309589;
inline constexpr double mix_hs_1_0 = 3.6718494178542013;
inline constexpr double mix_coulomb = 67.935478981685116;

inline constexpr double pitt_0_5 = 9.8696044010893586;
inline constexpr double pitt_0_75 = 35.27904499845682;
inline constexpr double pitt_1_0 = 157.91367041742974;

}  // namespace oracle
