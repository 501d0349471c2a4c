//! Frozen benchmark-table values (row order: mass-major, omega ascending;
//! masses 1, 10, 207, 1836; omegas 1e-4 .. 100).

pub const TABLE1: [[f64; 4]; 24] = [
    [3.0, 5.9816, 3.0, 7.19],
    [2.9947, 5.8676, 2.9811, 6.8849],
    [2.6884, 3.8717, 2.1219, 2.8296],
    [1.3501, 1.4841, 0.3927, 0.3995],
    [0.4807, 0.4937, 0.0437, 0.0437],
    [0.1572, 0.1585, 0.0045, 0.0045],
    [1.65, 2.5908, 0.9075, 1.5619],
    [1.6491, 2.5791, 0.9058, 1.5472],
    [1.5788, 2.1296, 0.783, 1.0317],
    [0.936, 0.9972, 0.2011, 0.202],
    [0.3502, 0.3552, 0.0237, 0.0236],
    [0.116, 0.1164, 0.0025, 0.0025],
    [1.5072, 1.7137, 0.7573, 0.875],
    [1.5066, 1.7076, 0.756, 0.87],
    [1.4512, 1.5372, 0.6665, 0.7021],
    [0.8834, 0.8889, 0.1812, 0.1811],
    [0.3336, 0.334, 0.0216, 0.0216],
    [0.1107, 0.1108, 0.0022, 0.0022],
    [1.5008, 1.5704, 0.7508, 0.7898],
    [1.5001, 1.5624, 0.7496, 0.7843],
    [1.4454, 1.4594, 0.6614, 0.6673],
    [0.881, 0.454, 0.1803, 0.2901],
    [0.3329, 0.3329, 0.0215, 0.0215],
    [0.1105, 0.1105, 0.0022, 0.0022],
];

pub const TABLE2: [[f64; 7]; 24] = [
    [-0.4887, -0.1413, 0.0708, 0.0708, 0.0, 0.0, -0.283],
    [-0.3899, -0.1283, 0.0727, 0.0727, 0.0029, 0.0029, -0.2795],
    [-0.2288, -0.0861, 0.057, 0.057, 0.0046, 0.0046, -0.2095],
    [-0.1327, -0.0601, 0.0343, 0.0343, 0.0014, 0.0014, -0.1314],
    [-0.1084, -0.0528, 0.0276, 0.0276, 0.0004, 0.0004, -0.1087],
    [-0.1017, -0.0506, 0.0257, 0.0257, 0.0001, 0.0001, -0.1022],
    [-0.8826, -0.1973, 0.223, -0.0254, 0.0, 0.0001, -0.395],
    [-0.6579, -0.1835, 0.2226, -0.0195, 0.0005, 0.006, -0.393],
    [-0.325, -0.1188, 0.1805, -0.0052, -0.0027, 0.0215, -0.313],
    [-0.1287, -0.0595, 0.0842, -0.005, -0.0144, 0.021, -0.1454],
    [-0.0867, -0.0432, 0.0534, -0.0051, -0.0168, 0.0184, -0.0932],
    [-0.0765, -0.0389, 0.0454, -0.005, -0.017, 0.0175, -0.0797],
    [-0.8813, -0.0828, 0.1148, -0.0318, 0.0, 0.0001, -0.1658],
    [-0.2886, -0.0696, 0.1127, -0.0255, 0.0, 0.0059, -0.1626],
    [-0.0603, -0.0266, 0.062, -0.0093, -0.0009, 0.0096, -0.088],
    [-0.0237, -0.007, 0.0137, -0.0025, -0.0022, 0.0036, -0.0195],
    [-0.0076, -0.004, 0.0062, -0.0014, -0.002, 0.0023, -0.009],
    [-0.0064, -0.0033, 0.0047, -0.0012, -0.0019, 0.0019, -0.0069],
    [-0.6838, -0.0332, 0.0481, -0.0147, 0.0, 0.0001, -0.0666],
    [-0.0683, -0.0218, 0.0437, -0.0093, 0.0, 0.0042, -0.0604],
    [-0.0092, -0.0045, 0.0122, -0.0019, -0.0002, 0.0021, -0.0167],
    [-0.0018, -0.0009, 0.0019, -0.0004, -0.0003, 0.0005, -0.0026],
    [-0.0009, -0.0005, 0.0008, -0.0002, -0.0003, 0.0003, -0.0011],
    [-0.0008, -0.0004, 0.0007, -0.0002, -0.0004, 0.0002, -0.0008],
];

pub const TABLE3: [[f64; 2]; 24] = [
    [11.289, 11.289],
    [4.8022, 4.8022],
    [2.3349, 2.3349],
    [0.9109, 0.9109],
    [0.3096, 0.3096],
    [0.1001, 0.1001],
    [5.7998, 5.7831],
    [2.4278, 2.1789],
    [1.3501, 0.9281],
    [0.6771, 0.329],
    [0.2623, 0.1078],
    [0.0883, 0.0345],
    [3.3411, 3.23],
    [1.2299, 0.6853],
    [0.9419, 0.2367],
    [0.6096, 0.0771],
    [0.2513, 0.0246],
    [0.0858, 0.0078],
    [2.0703, 1.764],
    [1.0181, 0.2513],
    [0.9172, 0.082],
    [0.6063, 0.0262],
    [0.2508, 0.0083],
    [0.0857, 0.0026],
];

pub const TABLE4: [[f64; 3]; 24] = [
    [-0.4999, 0.25, 0.1087],
    [-0.4849, 0.2501, 0.1219],
    [-0.3357, 0.2617, 0.1756],
    [1.6797, 0.4322, 0.3721],
    [26.2654, 1.1299, 1.0771],
    [288.5572, 3.3849, 3.3343],
    [-0.4999, 0.0455, -0.1519],
    [-0.4849, 0.0455, -0.138],
    [-0.3357, 0.0468, -0.072],
    [1.6797, 0.0716, 0.0121],
    [26.2654, 0.1816, 0.1384],
    [288.5572, 0.5397, 0.5008],
    [-0.4999, 0.0024, -0.0804],
    [-0.4849, 0.0024, -0.0672],
    [-0.3357, 0.0025, -0.0241],
    [1.6797, 0.0037, -0.0032],
    [26.2654, 0.0094, 0.0054],
    [288.5572, 0.0279, 0.0246],
    [-0.4999, 0.0003, -0.0329],
    [-0.4849, 0.0003, -0.0216],
    [-0.3357, 0.0003, -0.0042],
    [1.6797, 0.0004, -0.0005],
    [26.2654, 0.0011, 0.0006],
    [288.5572, 0.0032, 0.0027],
];

pub const TABLE_A2_EXACT: [[f64; 6]; 24] = [
    [-0.2499, 0.125, 0.125, 0.0, 0.0, -0.5],
    [-0.2347, 0.129, 0.129, 0.0039, 0.0039, -0.5006],
    [-0.0739, 0.1846, 0.1846, 0.0492, 0.0492, -0.5414],
    [2.1119, 0.8999, 0.8999, 0.6519, 0.6519, -0.9918],
    [27.3953, 7.8576, 7.8576, 7.1851, 7.1851, -2.69],
    [291.9421, 76.0373, 76.0373, 74.0028, 74.0028, -8.138],
    [-0.4544, 0.4132, 0.0414, 0.0, 0.0001, -0.9091],
    [-0.4394, 0.4142, 0.0482, 0.0008, 0.0068, -0.9094],
    [-0.2889, 0.4465, 0.1121, 0.0204, 0.0695, -0.9374],
    [1.7513, 1.1751, 0.7925, 0.5133, 0.7263, -1.4559],
    [26.4471, 8.4167, 7.5917, 6.7289, 7.4229, -3.7131],
    [289.0969, 77.5784, 75.2578, 72.5555, 74.7555, -11.0503],
    [-0.4974, 0.4952, 0.0025, 0.0, 0.0001, -0.9952],
    [-0.4824, 0.4955, 0.0099, 0.0002, 0.0075, -0.9955],
    [-0.3332, 0.5225, 0.0772, 0.0141, 0.0747, -1.0216],
    [1.6834, 1.2497, 0.7524, 0.4798, 0.7487, -1.5472],
    [26.2749, 8.5584, 7.5051, 6.6171, 7.4957, -3.9015],
    [288.5852, 77.9605, 75.0143, 72.2002, 74.9865, -11.5763],
    [-0.4996, 0.4994, 0.0003, 0.0, 0.0001, -0.9994],
    [-0.4846, 0.4998, 0.0078, 0.0002, 0.0075, -0.9998],
    [-0.3354, 0.5264, 0.0752, 0.0138, 0.075, -1.0258],
    [1.6801, 1.2535, 0.7503, 0.4781, 0.7499, -1.5517],
    [26.2665, 8.5657, 7.5006, 6.6114, 7.4995, -3.9106],
    [288.5604, 77.98, 75.0016, 72.182, 74.9985, -11.6017],
];

pub const TABLE_A2_MCHF: [[f64; 6]; 24] = [
    [-0.1085, 0.0543, 0.0543, 0.0, 0.0, -0.217],
    [-0.1064, 0.0563, 0.0563, 0.001, 0.001, -0.2211],
    [0.0122, 0.1275, 0.1275, 0.0445, 0.0445, -0.332],
    [2.1719, 0.8656, 0.8656, 0.6505, 0.6505, -0.8604],
    [27.4481, 7.83, 7.83, 7.1847, 7.1847, -2.5813],
    [291.9928, 76.0116, 76.0116, 74.0027, 74.0027, -8.0358],
    [-0.257, 0.1902, 0.0668, 0.0, 0.0, -0.5141],
    [-0.2559, 0.1917, 0.0677, 0.0003, 0.0008, -0.5164],
    [-0.1701, 0.2659, 0.1173, 0.023, 0.048, -0.6244],
    [1.8109, 1.0909, 0.7975, 0.5277, 0.7054, -1.3105],
    [26.4904, 8.3633, 7.5968, 6.7457, 7.4045, -3.6199],
    [289.1358, 77.533, 75.2628, 72.5725, 74.7381, -10.9706],
    [-0.4147, 0.3804, 0.0343, 0.0, 0.0, -0.8294],
    [-0.4129, 0.3829, 0.0354, 0.0002, 0.0016, -0.8329],
    [-0.3066, 0.4605, 0.0864, 0.015, 0.0651, -0.9336],
    [1.6904, 1.236, 0.7549, 0.482, 0.7451, -1.5277],
    [26.2789, 8.5523, 7.5065, 6.6191, 7.4935, -3.8925],
    [288.5885, 77.9558, 75.0155, 72.2021, 74.9845, -11.5694],
    [-0.4664, 0.4514, 0.015, 0.0, 0.0, -0.9328],
    [-0.4628, 0.4561, 0.0171, 0.0002, 0.0033, -0.9393],
    [-0.3309, 0.5142, 0.0772, 0.0139, 0.0729, -1.0091],
    [1.681, 1.2516, 0.7507, 0.4784, 0.7493, -1.549],
    [26.267, 8.5649, 7.5008, 6.6117, 7.4992, -3.9095],
    [288.5608, 77.9793, 75.0018, 72.1824, 74.9982, -11.601],
];

