// Frozen high-precision reference values for the test suites.
//
// Generated by tools/gen_oracle_values.py — do not edit by hand.
// Sources: sympy (exact symbolic evaluation) and mpmath (30-digit numerics),
// both independent of the C++ implementations under test.

#pragma once

namespace refvals {
struct LaguerreRef { int n; double alpha; double x; double value; };
inline constexpr LaguerreRef laguerre_ref[] = {
    {0, 0.0, 0.25000000000000000, 1.0000000000000000},
    {0, 0.0, 1.0000000000000000, 1.0000000000000000},
    {0, 0.0, 3.5000000000000000, 1.0000000000000000},
    {0, 0.50000000000000000, 0.25000000000000000, 1.0000000000000000},
    {0, 0.50000000000000000, 1.0000000000000000, 1.0000000000000000},
    {0, 0.50000000000000000, 3.5000000000000000, 1.0000000000000000},
    {0, 1.0000000000000000, 0.25000000000000000, 1.0000000000000000},
    {0, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000},
    {0, 1.0000000000000000, 3.5000000000000000, 1.0000000000000000},
    {0, 2.5000000000000000, 0.25000000000000000, 1.0000000000000000},
    {0, 2.5000000000000000, 1.0000000000000000, 1.0000000000000000},
    {0, 2.5000000000000000, 3.5000000000000000, 1.0000000000000000},
    {0, -0.50000000000000000, 0.25000000000000000, 1.0000000000000000},
    {0, -0.50000000000000000, 1.0000000000000000, 1.0000000000000000},
    {0, -0.50000000000000000, 3.5000000000000000, 1.0000000000000000},
    {1, 0.0, 0.25000000000000000, 0.75000000000000000},
    {1, 0.0, 1.0000000000000000, 0.0},
    {1, 0.0, 3.5000000000000000, -2.5000000000000000},
    {1, 0.50000000000000000, 0.25000000000000000, 1.2500000000000000},
    {1, 0.50000000000000000, 1.0000000000000000, 0.50000000000000000},
    {1, 0.50000000000000000, 3.5000000000000000, -2.0000000000000000},
    {1, 1.0000000000000000, 0.25000000000000000, 1.7500000000000000},
    {1, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000},
    {1, 1.0000000000000000, 3.5000000000000000, -1.5000000000000000},
    {1, 2.5000000000000000, 0.25000000000000000, 3.2500000000000000},
    {1, 2.5000000000000000, 1.0000000000000000, 2.5000000000000000},
    {1, 2.5000000000000000, 3.5000000000000000, 0.0},
    {1, -0.50000000000000000, 0.25000000000000000, 0.25000000000000000},
    {1, -0.50000000000000000, 1.0000000000000000, -0.50000000000000000},
    {1, -0.50000000000000000, 3.5000000000000000, -3.0000000000000000},
    {2, 0.0, 0.25000000000000000, 0.53125000000000000},
    {2, 0.0, 1.0000000000000000, -0.50000000000000000},
    {2, 0.0, 3.5000000000000000, 0.12500000000000000},
    {2, 0.50000000000000000, 0.25000000000000000, 1.2812500000000000},
    {2, 0.50000000000000000, 1.0000000000000000, -0.12500000000000000},
    {2, 0.50000000000000000, 3.5000000000000000, -0.75000000000000000},
    {2, 1.0000000000000000, 0.25000000000000000, 2.2812500000000000},
    {2, 1.0000000000000000, 1.0000000000000000, 0.50000000000000000},
    {2, 1.0000000000000000, 3.5000000000000000, -1.3750000000000000},
    {2, 2.5000000000000000, 0.25000000000000000, 6.7812500000000000},
    {2, 2.5000000000000000, 1.0000000000000000, 3.8750000000000000},
    {2, 2.5000000000000000, 3.5000000000000000, -1.7500000000000000},
    {2, -0.50000000000000000, 0.25000000000000000, 0.031250000000000000},
    {2, -0.50000000000000000, 1.0000000000000000, -0.62500000000000000},
    {2, -0.50000000000000000, 3.5000000000000000, 1.2500000000000000},
    {3, 0.0, 0.25000000000000000, 0.34114583333333333},
    {3, 0.0, 1.0000000000000000, -0.66666666666666667},
    {3, 0.0, 3.5000000000000000, 1.7291666666666667},
    {3, 0.50000000000000000, 0.25000000000000000, 1.2005208333333333},
    {3, 0.50000000000000000, 1.0000000000000000, -0.60416666666666667},
    {3, 0.50000000000000000, 3.5000000000000000, 1.1666666666666667},
    {3, 1.0000000000000000, 0.25000000000000000, 2.6223958333333333},
    {3, 1.0000000000000000, 1.0000000000000000, -0.16666666666666667},
    {3, 1.0000000000000000, 3.5000000000000000, 0.35416666666666667},
    {3, 2.5000000000000000, 0.25000000000000000, 11.513020833333333},
    {3, 2.5000000000000000, 1.0000000000000000, 4.6458333333333333},
    {3, 2.5000000000000000, 3.5000000000000000, -2.3333333333333333},
    {3, -0.50000000000000000, 0.25000000000000000, -0.080729166666666667},
    {3, -0.50000000000000000, 1.0000000000000000, -0.47916666666666667},
    {3, -0.50000000000000000, 3.5000000000000000, 1.9166666666666667},
    {5, 0.0, 0.25000000000000000, 0.037263997395833333},
    {5, 0.0, 1.0000000000000000, -0.46666666666666667},
    {5, 0.0, 3.5000000000000000, 0.17786458333333333},
    {5, 0.50000000000000000, 0.25000000000000000, 0.87100423177083333},
    {5, 0.50000000000000000, 1.0000000000000000, -0.93932291666666667},
    {5, 0.50000000000000000, 3.5000000000000000, 1.1375000000000000},
    {5, 1.0000000000000000, 0.25000000000000000, 2.8369059244791667},
    {5, 1.0000000000000000, 1.0000000000000000, -1.2583333333333333},
    {5, 1.0000000000000000, 3.5000000000000000, 1.9513020833333333},
    {5, 2.5000000000000000, 0.25000000000000000, 23.957267252604167},
    {5, 2.5000000000000000, 1.0000000000000000, 3.5033854166666667},
    {5, 2.5000000000000000, 3.5000000000000000, 1.2833333333333333},
    {5, -0.50000000000000000, 0.25000000000000000, -0.18384602864583333},
    {5, -0.50000000000000000, 1.0000000000000000, -0.066927083333333333},
    {5, -0.50000000000000000, 3.5000000000000000, -0.68541666666666667},
    {8, 0.0, 0.25000000000000000, -0.25988643547845265},
    {8, 0.0, 1.0000000000000000, 0.15399305555555556},
    {8, 0.0, 3.5000000000000000, -1.2524366590711806},
    {8, 0.50000000000000000, 0.25000000000000000, 0.23746925270746625},
    {8, 0.50000000000000000, 1.0000000000000000, -0.35980583069816468},
    {8, 0.50000000000000000, 3.5000000000000000, -1.7704101562500000},
    {8, 1.0000000000000000, 0.25000000000000000, 2.3167113171683417},
    {8, 1.0000000000000000, 1.0000000000000000, -1.4017609126984127},
    {8, 1.0000000000000000, 3.5000000000000000, -1.7173780653211806},
    {8, 2.5000000000000000, 0.25000000000000000, 47.070586904268416},
    {8, 2.5000000000000000, 1.0000000000000000, -3.7816870310949901},
    {8, 2.5000000000000000, 3.5000000000000000, 3.6276801215277778},
    {8, -0.50000000000000000, 0.25000000000000000, -0.21473766470712329},
    {8, -0.50000000000000000, 1.0000000000000000, 0.27532096741691468},
    {8, -0.50000000000000000, 3.5000000000000000, -0.49367404513888889},
    {1, -1.0000000000000000, 1.5000000000000000, -1.5000000000000000},
    {2, -1.0000000000000000, 1.5000000000000000, -0.37500000000000000},
    {3, -2.0000000000000000, 2.0000000000000000, 0.66666666666666667},
};

struct LegendreRef { int l; int m; double z; double value; };
inline constexpr LegendreRef legendre_ref[] = {
    {0, 0, -0.90000000000000000, 1.0000000000000000},
    {0, 0, -0.25000000000000000, 1.0000000000000000},
    {0, 0, 0.0, 1.0000000000000000},
    {0, 0, 0.60000000000000000, 1.0000000000000000},
    {0, 0, 0.95000000000000000, 1.0000000000000000},
    {1, -1, -0.90000000000000000, 0.21794494717703368},
    {1, -1, -0.25000000000000000, 0.48412291827592711},
    {1, -1, 0.0, 0.50000000000000000},
    {1, -1, 0.60000000000000000, 0.40000000000000000},
    {1, -1, 0.95000000000000000, 0.15612494995995996},
    {1, 0, -0.90000000000000000, -0.90000000000000000},
    {1, 0, -0.25000000000000000, -0.25000000000000000},
    {1, 0, 0.0, 0.0},
    {1, 0, 0.60000000000000000, 0.60000000000000000},
    {1, 0, 0.95000000000000000, 0.95000000000000000},
    {1, 1, -0.90000000000000000, -0.43588989435406736},
    {1, 1, -0.25000000000000000, -0.96824583655185422},
    {1, 1, 0.0, -1.0000000000000000},
    {1, 1, 0.60000000000000000, -0.80000000000000000},
    {1, 1, 0.95000000000000000, -0.31224989991991991},
    {2, -2, -0.90000000000000000, 0.023750000000000000},
    {2, -2, -0.25000000000000000, 0.11718750000000000},
    {2, -2, 0.0, 0.12500000000000000},
    {2, -2, 0.60000000000000000, 0.080000000000000000},
    {2, -2, 0.95000000000000000, 0.012187500000000000},
    {2, -1, -0.90000000000000000, -0.19615045245933031},
    {2, -1, -0.25000000000000000, -0.12103072956898178},
    {2, -1, 0.0, 0.0},
    {2, -1, 0.60000000000000000, 0.24000000000000000},
    {2, -1, 0.95000000000000000, 0.14831870246196196},
    {2, 0, -0.90000000000000000, 0.71500000000000000},
    {2, 0, -0.25000000000000000, -0.40625000000000000},
    {2, 0, 0.0, -0.50000000000000000},
    {2, 0, 0.60000000000000000, 0.040000000000000000},
    {2, 0, 0.95000000000000000, 0.85375000000000000},
    {2, 1, -0.90000000000000000, 1.1769027147559819},
    {2, 1, -0.25000000000000000, 0.72618437741389067},
    {2, 1, 0.0, 0.0},
    {2, 1, 0.60000000000000000, -1.4400000000000000},
    {2, 1, 0.95000000000000000, -0.88991221477177174},
    {2, 2, -0.90000000000000000, 0.57000000000000000},
    {2, 2, -0.25000000000000000, 2.8125000000000000},
    {2, 2, 0.0, 3.0000000000000000},
    {2, 2, 0.60000000000000000, 1.9200000000000000},
    {2, 2, 0.95000000000000000, 0.29250000000000000},
    {3, -3, -0.90000000000000000, 0.0017253974984848499},
    {3, -3, -0.25000000000000000, 0.018911051495153403},
    {3, -3, 0.0, 0.020833333333333333},
    {3, -3, 0.60000000000000000, 0.010666666666666667},
    {3, -3, 0.95000000000000000, 0.00063425760921233732},
    {3, -2, -0.90000000000000000, -0.021375000000000000},
    {3, -2, -0.25000000000000000, -0.029296875000000000},
    {3, -2, 0.0, 0.0},
    {3, -2, 0.60000000000000000, 0.048000000000000000},
    {3, -2, 0.95000000000000000, 0.011578125000000000},
    {3, -1, -0.90000000000000000, 0.16618302222248818},
    {3, -1, -0.25000000000000000, -0.083208626578674972},
    {3, -1, 0.0, -0.12500000000000000},
    {3, -1, 0.60000000000000000, 0.080000000000000000},
    {3, -1, 0.95000000000000000, 0.13709722168358984},
    {3, 0, -0.90000000000000000, -0.47250000000000000},
    {3, 0, -0.25000000000000000, 0.33593750000000000},
    {3, 0, 0.0, 0.0},
    {3, 0, 0.60000000000000000, -0.36000000000000000},
    {3, 0, 0.95000000000000000, 0.71843750000000000},
    {3, 1, -0.90000000000000000, -1.9941962666698582},
    {3, 1, -0.25000000000000000, 0.99850351894409967},
    {3, 1, 0.0, 1.5000000000000000},
    {3, 1, 0.60000000000000000, -0.96000000000000000},
    {3, 1, 0.95000000000000000, -1.6451666602030780},
    {3, 2, -0.90000000000000000, -2.5650000000000000},
    {3, 2, -0.25000000000000000, -3.5156250000000000},
    {3, 2, 0.0, 0.0},
    {3, 2, 0.60000000000000000, 5.7600000000000000},
    {3, 2, 0.95000000000000000, 1.3893750000000000},
    {3, 3, -0.90000000000000000, -1.2422861989090920},
    {3, 3, -0.25000000000000000, -13.615957076510450},
    {3, 3, 0.0, -15.000000000000000},
    {3, 3, 0.60000000000000000, -7.6800000000000000},
    {3, 3, 0.95000000000000000, -0.45666547863288287},
    {4, -4, -0.90000000000000000, 9.4010416666666667e-5},
    {4, -4, -0.25000000000000000, 0.0022888183593750000},
    {4, -4, 0.0, 0.0026041666666666667},
    {4, -4, 0.60000000000000000, 0.0010666666666666667},
    {4, -4, 0.95000000000000000, 2.4755859375000000e-5},
    {4, -3, -0.90000000000000000, -0.0015528577486363650},
    {4, -3, -0.25000000000000000, -0.0047277628737883507},
    {4, -3, 0.0, 0.0},
    {4, -3, 0.60000000000000000, 0.0064000000000000000},
    {4, -3, 0.95000000000000000, 0.00060254472875172045},
    {4, -2, -0.90000000000000000, 0.018485416666666667},
    {4, -2, -0.25000000000000000, -0.010986328125000000},
    {4, -2, 0.0, -0.020833333333333333},
    {4, -2, 0.60000000000000000, 0.020266666666666667},
    {4, -2, 0.95000000000000000, 0.010801171875000000},
    {4, -1, -0.90000000000000000, -0.13093042701660298},
    {4, -1, -0.25000000000000000, 0.077535311130128951},
    {4, -1, 0.0, 0.0},
    {4, -1, 0.60000000000000000, -0.028800000000000000},
    {4, -1, 0.95000000000000000, 0.12301182385438970},
    {4, 0, -0.90000000000000000, 0.20793750000000000},
    {4, 0, -0.25000000000000000, 0.15771484375000000},
    {4, 0, 0.0, 0.37500000000000000},
    {4, 0, 0.60000000000000000, -0.40800000000000000},
    {4, 0, 0.95000000000000000, 0.55408984375000000},
    {4, 1, -0.90000000000000000, 2.6186085403320596},
    {4, 1, -0.25000000000000000, -1.5507062226025790},
    {4, 1, 0.0, 0.0},
    {4, 1, 0.60000000000000000, 0.57600000000000000},
    {4, 1, 0.95000000000000000, -2.4602364770877940},
    {4, 2, -0.90000000000000000, 6.6547500000000000},
    {4, 2, -0.25000000000000000, -3.9550781250000000},
    {4, 2, 0.0, -7.5000000000000000},
    {4, 2, 0.60000000000000000, 7.2960000000000000},
    {4, 2, 0.95000000000000000, 3.8884218750000000},
    {4, 3, -0.90000000000000000, 7.8264030531272794},
    {4, 3, -0.25000000000000000, 23.827924883893287},
    {4, 3, 0.0, 0.0},
    {4, 3, 0.60000000000000000, -32.256000000000000},
    {4, 3, 0.95000000000000000, -3.0368254329086711},
    {4, 4, -0.90000000000000000, 3.7905000000000000},
    {4, 4, -0.25000000000000000, 92.285156250000000},
    {4, 4, 0.0, 105.00000000000000},
    {4, 4, 0.60000000000000000, 43.008000000000000},
    {4, 4, 0.95000000000000000, 0.99815625000000000},
    {5, -5, -0.90000000000000000, 4.0978190589015186e-6},
    {5, -5, -0.25000000000000000, 0.00022161388470882894},
    {5, -5, 0.0, 0.00026041666666666667},
    {5, -5, 0.60000000000000000, 8.5333333333333333e-5},
    {5, -5, 0.95000000000000000, 7.7300146122753611e-7},
    {5, -4, -0.90000000000000000, -8.4609375000000000e-5},
    {5, -4, -0.25000000000000000, -0.00057220458984375000},
    {5, -4, 0.0, 0.0},
    {5, -4, 0.60000000000000000, 0.00064000000000000000},
    {5, -4, 0.95000000000000000, 2.3518066406250000e-5},
    {5, -3, -0.90000000000000000, 0.0013565937831837133},
    {5, -3, -0.25000000000000000, -0.0010341981286412017},
    {5, -3, 0.0, -0.0026041666666666667},
    {5, -3, 0.60000000000000000, 0.0029866666666666667},
    {5, -3, 0.95000000000000000, 0.00056468747770185907},
    {5, -2, -0.90000000000000000, -0.015283125000000000},
    {5, -2, -0.25000000000000000, 0.011901855468750000},
    {5, -2, 0.0, 0.0},
    {5, -2, 0.60000000000000000, 0.0019200000000000000},
    {5, -2, 0.95000000000000000, 0.0098848242187500000},
    {5, -1, -0.90000000000000000, 0.093664565361169936},
    {5, -1, -0.25000000000000000, 0.012528571615539129},
    {5, -1, 0.0, 0.062500000000000000},
    {5, -1, 0.60000000000000000, -0.065920000000000000},
    {5, -1, 0.95000000000000000, 0.10674323815071040},
    {5, 0, -0.90000000000000000, 0.041141250000000000},
    {5, 0, -0.25000000000000000, -0.33972167968750000},
    {5, 0, 0.0, 0.0},
    {5, 0, 0.60000000000000000, -0.15264000000000000},
    {5, 0, 0.95000000000000000, 0.37274363281250000},
    {5, 1, -0.90000000000000000, -2.8099369608350981},
    {5, 1, -0.25000000000000000, -0.37585714846617388},
    {5, 1, 0.0, -1.8750000000000000},
    {5, 1, 0.60000000000000000, 1.9776000000000000},
    {5, 1, 0.95000000000000000, -3.2022971445213121},
    {5, 2, -0.90000000000000000, -12.837825000000000},
    {5, 2, -0.25000000000000000, 9.9975585937500000},
    {5, 2, 0.0, 0.0},
    {5, 2, 0.60000000000000000, 1.6128000000000000},
    {5, 2, 0.95000000000000000, 8.3032523437500000},
    {5, 3, -0.90000000000000000, -27.348930668983660},
    {5, 3, -0.25000000000000000, 20.849434273406627},
    {5, 3, 0.0, 52.500000000000000},
    {5, 3, 0.60000000000000000, -60.211200000000000},
    {5, 3, 0.95000000000000000, -11.384099550469479},
    {5, 4, -0.90000000000000000, -30.703050000000000},
    {5, 4, -0.25000000000000000, -207.64160156250000},
    {5, 4, 0.0, 0.0},
    {5, 4, 0.60000000000000000, 232.24320000000000},
    {5, 4, 0.95000000000000000, 8.5342359375000000},
    {5, 5, -0.90000000000000000, -14.870165800941831},
    {5, 5, -0.25000000000000000, -804.19246483139845},
    {5, 5, 0.0, -945.00000000000000},
    {5, 5, 0.60000000000000000, -309.65760000000000},
    {5, 5, 0.95000000000000000, -2.8050677025024830},
    {6, -6, -0.90000000000000000, 1.4884982638888889e-7},
    {6, -6, -0.25000000000000000, 1.7881393432617188e-5},
    {6, -6, 0.0, 2.1701388888888889e-5},
    {6, -6, 0.60000000000000000, 5.6888888888888889e-6},
    {6, -6, 0.95000000000000000, 2.0114135742187500e-8},
    {6, -5, -0.90000000000000000, -3.6880371530113668e-6},
    {6, -5, -0.25000000000000000, -5.5403471177207235e-5},
    {6, -5, 0.0, 0.0},
    {6, -5, 0.60000000000000000, 5.1200000000000000e-5},
    {6, -5, 0.95000000000000000, 7.3435138816615930e-7},
    {6, -4, -0.90000000000000000, 7.4362239583333333e-5},
    {6, -4, -0.25000000000000000, -7.1525573730468750e-5},
    {6, -4, 0.0, -0.00026041666666666667},
    {6, -4, 0.60000000000000000, 0.00031573333333333333},
    {6, -4, 0.95000000000000000, 2.2100793457031250e-5},
    {6, -3, -0.90000000000000000, -0.0011471736618051146},
    {6, -3, -0.25000000000000000, 0.0013666189557044451},
    {6, -3, 0.0, 0.0},
    {6, -3, 0.60000000000000000, 0.00076800000000000000},
    {6, -3, 0.95000000000000000, 0.00052176607605344293},
    {6, -2, -0.90000000000000000, 0.011980835937500000},
    {6, -2, -0.25000000000000000, 2.8610229492187500e-5},
    {6, -2, 0.0, 0.0078125000000000000},
    {6, -2, 0.60000000000000000, -0.0060160000000000000},
    {6, -2, 0.95000000000000000, 0.0088616121826171875},
    {6, -1, -0.90000000000000000, -0.057651069858452920},
    {6, -1, -0.25000000000000000, -0.049227830923321202},
    {6, -1, 0.0, 0.0},
    {6, -1, 0.60000000000000000, -0.045696000000000000},
    {6, -1, 0.95000000000000000, 0.089059934751052130},
    {6, 0, -0.90000000000000000, -0.24116431250000000},
    {6, 0, -0.25000000000000000, 0.024276733398437500},
    {6, 0, 0.0, -0.31250000000000000},
    {6, 0, 0.60000000000000000, 0.17209600000000000},
    {6, 0, 0.95000000000000000, 0.18745362402343750},
    {6, 1, -0.90000000000000000, 2.4213449340550226},
    {6, 1, -0.25000000000000000, 2.0675688987794905},
    {6, 1, 0.0, 0.0},
    {6, 1, 0.60000000000000000, 1.9192320000000000},
    {6, 1, 0.95000000000000000, -3.7405172595441895},
    {6, 2, -0.90000000000000000, 20.127804375000000},
    {6, 2, -0.25000000000000000, 0.048065185546875000},
    {6, 2, 0.0, 13.125000000000000},
    {6, 2, 0.60000000000000000, -10.106880000000000},
    {6, 2, 0.95000000000000000, 14.887508466796875},
    {6, 3, -0.90000000000000000, 69.381063065973332},
    {6, 3, -0.25000000000000000, -82.653114441004841},
    {6, 3, 0.0, 0.0},
    {6, 3, 0.60000000000000000, -46.448640000000000},
    {6, 3, 0.95000000000000000, -31.556412279712228},
    {6, 4, -0.90000000000000000, 134.92284750000000},
    {6, 4, -0.25000000000000000, -129.77600097656250},
    {6, 4, 0.0, -472.50000000000000},
    {6, 4, 0.60000000000000000, 572.86656000000000},
    {6, 4, 0.95000000000000000, 40.099679648437500},
    {6, 5, -0.90000000000000000, 147.21464142932412},
    {6, 5, -0.25000000000000000, 2211.5292782863457},
    {6, 5, 0.0, 0.0},
    {6, 5, 0.60000000000000000, -2043.7401600000000},
    {6, 5, 0.95000000000000000, -29.312957491150948},
    {6, 6, -0.90000000000000000, 71.299305000000000},
    {6, 6, -0.25000000000000000, 8565.2160644531250},
    {6, 6, 0.0, 10395.000000000000},
    {6, 6, 0.60000000000000000, 2724.9868800000000},
    {6, 6, 0.95000000000000000, 9.6347032031250000},
};

struct PhatRef { int l; int m; double zeta; double value; };
inline constexpr PhatRef phat_ref[] = {
    {0, 0, -2.5000000000000000, 1.0000000000000000},
    {0, 0, -0.50000000000000000, 1.0000000000000000},
    {0, 0, 0.0, 1.0000000000000000},
    {0, 0, 1.0000000000000000, 1.0000000000000000},
    {0, 0, 2.7000000000000000, 1.0000000000000000},
    {1, -1, -2.5000000000000000, -1.3462912017836260},
    {1, -1, -0.50000000000000000, -0.55901699437494742},
    {1, -1, 0.0, -0.50000000000000000},
    {1, -1, 1.0000000000000000, -0.70710678118654752},
    {1, -1, 2.7000000000000000, -1.4396180048887969},
    {1, 0, -2.5000000000000000, -2.5000000000000000},
    {1, 0, -0.50000000000000000, -0.50000000000000000},
    {1, 0, 0.0, 0.0},
    {1, 0, 1.0000000000000000, 1.0000000000000000},
    {1, 0, 2.7000000000000000, 2.7000000000000000},
    {1, 1, -2.5000000000000000, -2.6925824035672520},
    {1, 1, -0.50000000000000000, -1.1180339887498948},
    {1, 1, 0.0, -1.0000000000000000},
    {1, 1, 1.0000000000000000, -1.4142135623730950},
    {1, 1, 2.7000000000000000, -2.8792360097775938},
    {2, -2, -2.5000000000000000, 0.90625000000000000},
    {2, -2, -0.50000000000000000, 0.15625000000000000},
    {2, -2, 0.0, 0.12500000000000000},
    {2, -2, 1.0000000000000000, 0.25000000000000000},
    {2, -2, 2.7000000000000000, 1.0362500000000000},
    {2, -1, -2.5000000000000000, 3.3657280044590650},
    {2, -1, -0.50000000000000000, 0.27950849718747371},
    {2, -1, 0.0, 0.0},
    {2, -1, 1.0000000000000000, -0.70710678118654752},
    {2, -1, 2.7000000000000000, -3.8869686131997516},
    {2, 0, -2.5000000000000000, 9.8750000000000000},
    {2, 0, -0.50000000000000000, 0.87500000000000000},
    {2, 0, 0.0, 0.50000000000000000},
    {2, 0, 1.0000000000000000, 2.0000000000000000},
    {2, 0, 2.7000000000000000, 11.435000000000000},
    {2, 1, -2.5000000000000000, 20.194368026754390},
    {2, 1, -0.50000000000000000, 1.6770509831248423},
    {2, 1, 0.0, 0.0},
    {2, 1, 1.0000000000000000, -4.2426406871192851},
    {2, 1, 2.7000000000000000, -23.321811679198509},
    {2, 2, -2.5000000000000000, 21.750000000000000},
    {2, 2, -0.50000000000000000, 3.7500000000000000},
    {2, 2, 0.0, 3.0000000000000000},
    {2, 2, 1.0000000000000000, 6.0000000000000000},
    {2, 2, 2.7000000000000000, 24.870000000000000},
    {3, -3, -2.5000000000000000, -0.40669213387213702},
    {3, -3, -0.50000000000000000, -0.029115468457028512},
    {3, -3, 0.0, -0.020833333333333333},
    {3, -3, 1.0000000000000000, -0.058925565098878960},
    {3, -3, 2.7000000000000000, -0.49726805252200526},
    {3, -2, -2.5000000000000000, -2.2656250000000000},
    {3, -2, -0.50000000000000000, -0.078125000000000000},
    {3, -2, 0.0, 0.0},
    {3, -2, 1.0000000000000000, 0.25000000000000000},
    {3, -2, 2.7000000000000000, 2.7978750000000000},
    {3, -1, -2.5000000000000000, -10.854472814380485},
    {3, -1, -0.50000000000000000, -0.31444705933590793},
    {3, -1, 0.0, -0.12500000000000000},
    {3, -1, 1.0000000000000000, -1.0606601717798213},
    {3, -1, 2.7000000000000000, -13.478423570771361},
    {3, 0, -2.5000000000000000, -42.812500000000000},
    {3, 0, -0.50000000000000000, -1.0625000000000000},
    {3, 0, 0.0, 0.0},
    {3, 0, 1.0000000000000000, 4.0000000000000000},
    {3, 0, 2.7000000000000000, 53.257500000000000},
    {3, 1, -2.5000000000000000, -130.25367377256582},
    {3, 1, -0.50000000000000000, -3.7733647120308951},
    {3, 1, 0.0, -1.5000000000000000},
    {3, 1, 1.0000000000000000, -12.727922061357855},
    {3, 1, 2.7000000000000000, -161.74108284925633},
    {3, 2, -2.5000000000000000, -271.87500000000000},
    {3, 2, -0.50000000000000000, -9.3750000000000000},
    {3, 2, 0.0, 0.0},
    {3, 2, 1.0000000000000000, 30.000000000000000},
    {3, 2, 2.7000000000000000, 335.74500000000000},
    {3, 3, -2.5000000000000000, -292.81833638793866},
    {3, 3, -0.50000000000000000, -20.963137289060528},
    {3, 3, 0.0, -15.000000000000000},
    {3, 3, 1.0000000000000000, -42.426406871192851},
    {3, 3, 2.7000000000000000, -358.03299781584378},
    {6, 6, 0.50000000000000000, 20302.734375000000},
    {6, 3, 1.0000000000000000, -6236.6818100653492},
    {5, 2, -1.5000000000000000, -1983.5156250000000},
};

struct CGRef { double j1, m1, j2, m2, J, M; double value; };
inline constexpr CGRef cg_ref[] = {
    {1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 2.0000000000000000, 2.0000000000000000, 1.0000000000000000},
    {1.0000000000000000, 0.0, 1.0000000000000000, 0.0, 2.0000000000000000, 0.0, 0.81649658092772603},
    {1.0000000000000000, 1.0000000000000000, 1.0000000000000000, -1.0000000000000000, 0.0, 0.0, 0.57735026918962576},
    {1.0000000000000000, 0.0, 1.0000000000000000, 0.0, 0.0, 0.0, -0.57735026918962576},
    {1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.0, 2.0000000000000000, 1.0000000000000000, 0.70710678118654752},
    {1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.0, 1.0000000000000000, 1.0000000000000000, 0.70710678118654752},
    {1.0000000000000000, -1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 2.0000000000000000, 0.0, 0.40824829046386302},
    {1.0000000000000000, -1.0000000000000000, 1.0000000000000000, 0.0, 2.0000000000000000, -1.0000000000000000, 0.70710678118654752},
    {2.0000000000000000, 1.0000000000000000, 1.0000000000000000, -1.0000000000000000, 2.0000000000000000, 0.0, 0.70710678118654752},
    {2.0000000000000000, 0.0, 1.0000000000000000, 0.0, 3.0000000000000000, 0.0, 0.77459666924148338},
    {2.0000000000000000, 2.0000000000000000, 1.0000000000000000, -1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.77459666924148338},
    {3.0000000000000000, 1.0000000000000000, 2.0000000000000000, -1.0000000000000000, 4.0000000000000000, 0.0, 0.59761430466719682},
    {3.0000000000000000, 3.0000000000000000, 3.0000000000000000, -3.0000000000000000, 0.0, 0.0, 0.37796447300922723},
    {0.50000000000000000, 0.50000000000000000, 0.50000000000000000, -0.50000000000000000, 1.0000000000000000, 0.0, 0.70710678118654752},
    {0.50000000000000000, 0.50000000000000000, 0.50000000000000000, -0.50000000000000000, 0.0, 0.0, 0.70710678118654752},
    {1.0000000000000000, 0.0, 0.50000000000000000, 0.50000000000000000, 1.5000000000000000, 0.50000000000000000, 0.81649658092772603},
    {1.5000000000000000, 0.50000000000000000, 1.0000000000000000, 0.0, 2.5000000000000000, 0.50000000000000000, 0.77459666924148338},
    {1.5000000000000000, -0.50000000000000000, 0.50000000000000000, 0.50000000000000000, 1.0000000000000000, 0.0, -0.70710678118654752},
    {2.0000000000000000, 0.0, 1.5000000000000000, 0.50000000000000000, 2.5000000000000000, 0.50000000000000000, -0.29277002188455995},
    {4.0000000000000000, 2.0000000000000000, 3.0000000000000000, -1.0000000000000000, 5.0000000000000000, 1.0000000000000000, 0.33597851550592172},
    {5.0000000000000000, 0.0, 5.0000000000000000, 0.0, 6.0000000000000000, 0.0, 0.37762745602468051},
    {6.0000000000000000, 3.0000000000000000, 6.0000000000000000, -2.0000000000000000, 7.0000000000000000, 1.0000000000000000, -0.36931844203655708},
};

struct O2NormRef { int n; int m; double s; double value; };
inline constexpr O2NormRef o2_norm_ref[] = {
    {0, 0, 0.0, 0.56418958354775629},
    {1, 0, 0.0, -0.56418958354775629},
    {0, 0, 0.50000000000000000, 0.59931147515322375},
    {2, 1, 0.25000000000000000, 0.27719894533818941},
    {3, 2, 0.50000000000000000, -0.081449976028848210},
    {4, 4, 0.0, 0.013764816393526448},
    {1, -1, 0.0, -0.56418958354775629},
    {0, -1, 0.50000000000000000, 0.0},
    {2, -2, 0.0, 0.79788456080286536},
};

struct O2StateRef { int n; int m; double s; double rho; double phi; double re; double im; };
inline constexpr O2StateRef o2_state_ref[] = {
    {0, 0, 0.0, 0.0, 0.0, 0.56418958354775629, 0.0},
    {0, 0, 0.0, 1.3000000000000000, 0.70000000000000000, 0.24235178703879129, 0.0},
    {2, 1, 0.0, 0.90000000000000000, 2.1000000000000000, -0.088649687162288735, 0.15157736112400551},
    {1, 0, 0.50000000000000000, 1.7000000000000000, 4.4000000000000000, -0.12303763936902268, 0.16903194581556740},
    {3, 2, 0.25000000000000000, 0.60000000000000000, 5.9000000000000000, -0.17160156706421953, -0.14708798430481724},
    {4, -2, 0.0, 2.2000000000000000, 1.1000000000000000, 0.067948641979984783, 0.093349411028231173},
    {0, 1, 0.50000000000000000, 1.0500000000000000, 3.3000000000000000, 0.071409879480126899, -0.29485536404745297},
    {2, -1, 0.25000000000000000, 1.4000000000000000, 0.20000000000000000, -0.080605793975229627, 0.012182374249208337},
};

struct O3StateRef { int n; int l; int m; double rho; double theta; double phi; double re; double im; };
inline constexpr O3StateRef o3_state_ref[] = {
    {0, 0, 0, 0.80000000000000000, 1.1000000000000000, 0.40000000000000000, 0.30772541161284369, 0.0},
    {0, 1, 1, 1.2000000000000000, 0.70000000000000000, 2.8000000000000000, 0.15024943803856577, -0.053418157411535068},
    {1, 2, -1, 0.95000000000000000, 2.0000000000000000, 5.1000000000000000, 0.068401360474489182, 0.16754156835780035},
    {2, 3, 2, 1.6000000000000000, 1.3000000000000000, 0.90000000000000000, -0.012167893308605542, 0.052154774749639198},
    {1, 0, 0, 2.0000000000000000, 0.50000000000000000, 3.7000000000000000, 0.11706929710488348, 0.0},
};

struct O21StateRef { int n; int l; int m; int s2; double rho; double beta; double phi; double re; double im; };
inline constexpr O21StateRef o21_state_ref[] = {
    {0, 0, 0, 0, 1.1000000000000000, 0.0, 0.30000000000000000, 0.82034090205626605, 0.0},
    {0, 1, 0, 0, 0.90000000000000000, 0.80000000000000000, 1.9000000000000000, 0.65390542085311011, 0.0},
    {1, 2, 1, 0, 1.5000000000000000, -0.60000000000000000, 4.2000000000000000, 0.42028564504317383, 0.74717531927415634},
    {0, 0, 0, 1, 1.2000000000000000, 0.50000000000000000, 2.2000000000000000, 0.26842264184615219, 0.52738597779142363},
    {0, 0, 2, 1, 0.85000000000000000, -1.1000000000000000, 0.70000000000000000, -0.068023425943841181, 0.37551515484068114},
    {1, 1, 1, 1, 1.4000000000000000, 0.90000000000000000, 3.0000000000000000, -0.0021825731792106351, -0.010121316565357165},
    {0, 2, 3, 1, 1.0000000000000000, 1.3000000000000000, 5.5000000000000000, 1.3238819780708544, 0.56042145126688220},
};

struct O3HalfStateRef { int n; int l; int m; double rho; double theta; double phi; double re; double im; };
inline constexpr O3HalfStateRef o3_half_state_ref[] = {
    {0, 0, 0, 1.1000000000000000, 0.90000000000000000, 0.60000000000000000, 0.79479538482188171, 0.24585902354783815},
    {0, 1, 1, 0.80000000000000000, 1.2000000000000000, 2.5000000000000000, 0.83761524197290139, 0.58344160970015609},
    {1, 0, 2, 1.3000000000000000, 2.0000000000000000, 4.0000000000000000, -0.26337690616307942, -0.17076326881350839},
    {0, 2, 2, 1.0000000000000000, 0.70000000000000000, 1.0000000000000000, -4.3762566017767062, 3.2691612599650880},
};

struct MomentRef { double alpha; int k; double value; };
inline constexpr MomentRef laguerre_moment_ref[] = {
    {0.0, 0, 1.0000000000000000},
    {0.0, 1, 1.0000000000000000},
    {0.0, 5, 120.00000000000000},
    {0.0, 20, 2.4329020081766400e+18},
    {0.0, 40, 8.1591528324789773e+47},
    {0.0, 63, 1.9826083154044401e+87},
    {0.25000000000000000, 0, 0.90640247705547708},
    {0.25000000000000000, 1, 1.1330030963193463},
    {0.25000000000000000, 5, 184.86096222719835},
    {0.25000000000000000, 20, 5.1848126999016484e+18},
    {0.25000000000000000, 40, 2.0598992580676695e+48},
    {0.25000000000000000, 63, 5.5994441830516705e+87},
    {0.50000000000000000, 0, 0.88622692545275801},
    {0.50000000000000000, 1, 1.3293403881791370},
    {0.50000000000000000, 5, 287.88527781504436},
    {0.50000000000000000, 20, 1.1082798113786904e+19},
    {0.50000000000000000, 40, 5.2085035054327157e+48},
    {0.50000000000000000, 63, 1.5829918815312768e+88},
};

}  // namespace refvals
