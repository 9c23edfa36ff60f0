// IAPWS-IF97 coefficient tables (Revised Release, 2007).

#pragma once

namespace turbex::steam::if97 {

struct Term {
    int I;
    int J;
    double n;
};

struct IdealTerm {
    int J;
    double n;
};

// Region 1 Gibbs energy, gamma(pi, tau).
inline constexpr Term kRegion1[] = {
    {0, -2, 0.14632971213167},
    {0, -1, -0.84548187169114},
    {0, 0, -3.756360367204},
    {0, 1, 3.3855169168385},
    {0, 2, -0.95791963387872},
    {0, 3, 0.15772038513228},
    {0, 4, -0.016616417199501},
    {0, 5, 0.00081214629983568},
    {1, -9, 0.00028319080123804},
    {1, -7, -0.00060706301565874},
    {1, -1, -0.018990068218419},
    {1, 0, -0.032529748770505},
    {1, 1, -0.021841717175414},
    {1, 3, -5.283835796993e-05},
    {2, -3, -0.00047184321073267},
    {2, 0, -0.00030001780793026},
    {2, 1, 4.7661393906987e-05},
    {2, 3, -4.4141845330846e-06},
    {2, 17, -7.2694996297594e-16},
    {3, -4, -3.1679644845054e-05},
    {3, 0, -2.8270797985312e-06},
    {3, 6, -8.5205128120103e-10},
    {4, -5, -2.2425281908e-06},
    {4, -2, -6.5171222895601e-07},
    {4, 10, -1.4341729937924e-13},
    {5, -8, -4.0516996860117e-07},
    {8, -11, -1.2734301741641e-09},
    {8, -6, -1.7424871230634e-10},
    {21, -29, -6.8762131295531e-19},
    {23, -31, 1.4478307828521e-20},
    {29, -38, 2.6335781662795e-23},
    {30, -39, -1.1947622640071e-23},
    {31, -40, 1.8228094581404e-24},
    {32, -41, -9.3537087292458e-26},
};

// Region 2 ideal-gas part.
inline constexpr IdealTerm kRegion2Ideal[] = {
    {0, -9.6927686500217},
    {1, 10.086655968018},
    {-5, -0.005608791128302},
    {-4, 0.071452738081455},
    {-3, -0.40710498223928},
    {-2, 1.4240819171444},
    {-1, -4.383951131945},
    {2, -0.28408632460772},
    {3, 0.021268463753307},
};

// Region 2 residual part.
inline constexpr Term kRegion2Residual[] = {
    {1, 0, -0.0017731742473213},
    {1, 1, -0.017834862292358},
    {1, 2, -0.045996013696365},
    {1, 3, -0.057581259083432},
    {1, 6, -0.05032527872793},
    {2, 1, -3.3032641670203e-05},
    {2, 2, -0.00018948987516315},
    {2, 4, -0.0039392777243355},
    {2, 7, -0.043797295650573},
    {2, 36, -2.6674547914087e-05},
    {3, 0, 2.0481737692309e-08},
    {3, 1, 4.3870667284435e-07},
    {3, 3, -3.227767723857e-05},
    {3, 6, -0.0015033924542148},
    {3, 35, -0.040668253562649},
    {4, 1, -7.8847309559367e-10},
    {4, 2, 1.2790717852285e-08},
    {4, 3, 4.8225372718507e-07},
    {5, 7, 2.2922076337661e-06},
    {6, 3, -1.6714766451061e-11},
    {6, 16, -0.0021171472321355},
    {6, 35, -23.895741934104},
    {7, 0, -5.905956432427e-18},
    {7, 11, -1.2621808899101e-06},
    {7, 25, -0.038946842435739},
    {8, 8, 1.1256211360459e-11},
    {8, 36, -8.2311340897998},
    {9, 13, 1.9809712802088e-08},
    {10, 4, 1.0406965210174e-19},
    {10, 10, -1.0234747095929e-13},
    {10, 14, -1.0018179379511e-09},
    {16, 29, -8.0882908646985e-11},
    {16, 50, 0.10693031879409},
    {18, 57, -0.33662250574171},
    {20, 20, 8.9185845355421e-25},
    {20, 35, 3.0629316876232e-13},
    {20, 48, -4.2002467698208e-06},
    {21, 21, -5.9056029685639e-26},
    {22, 53, 3.7826947613457e-06},
    {23, 39, -1.2768608934681e-15},
    {24, 26, 7.3087610595061e-29},
    {24, 40, 5.5414715350778e-17},
    {24, 58, -9.436970724121e-07},
};

// Backward T(p, h), region 1.
inline constexpr Term kBackward1Tph[] = {
    {0, 0, -238.72489924521},
    {0, 1, 404.21188637945},
    {0, 2, 113.49746881718},
    {0, 6, -5.8457616048039},
    {0, 22, -0.0001528548241314},
    {0, 32, -1.0866707695377e-06},
    {1, 0, -13.391744872602},
    {1, 1, 43.211039183559},
    {1, 2, -54.010067170506},
    {1, 3, 30.535892203916},
    {1, 4, -6.5964749423638},
    {1, 10, 0.0093965400878363},
    {1, 32, 1.157364750534e-07},
    {2, 10, -2.5858641282073e-05},
    {2, 32, -4.0644363084799e-09},
    {3, 10, 6.6456186191635e-08},
    {3, 32, 8.0670734103027e-11},
    {4, 32, -9.3477771213947e-13},
    {5, 32, 5.8265442020601e-15},
    {6, 32, -1.5020185953503e-17},
};

// Backward T(p, h), subregion 2a.
inline constexpr Term kBackward2aTph[] = {
    {0, 0, 1089.8952318288},
    {0, 1, 849.51654495535},
    {0, 2, -107.81748091826},
    {0, 3, 33.153654801263},
    {0, 7, -7.4232016790248},
    {0, 20, 11.765048724356},
    {1, 0, 1.844574935579},
    {1, 1, -4.1792700549624},
    {1, 2, 6.2478196935812},
    {1, 3, -17.344563108114},
    {1, 7, -200.58176862096},
    {1, 9, 271.96065473796},
    {1, 11, -455.11318285818},
    {1, 18, 3091.9688604755},
    {1, 44, 252266.40357872},
    {2, 0, -0.0061707422868339},
    {2, 2, -0.31078046629583},
    {2, 7, 11.670873077107},
    {2, 36, 128127984.04046},
    {2, 38, -985549096.23276},
    {2, 40, 2822454697.3002},
    {2, 42, -3594897141.0703},
    {2, 44, 1722734991.3197},
    {3, 24, -13551.334240775},
    {3, 44, 12848734.66465},
    {4, 12, 1.3865724283226},
    {4, 32, 235988.32556514},
    {4, 44, -13105236.545054},
    {5, 32, 7399.9835474766},
    {5, 36, -551966.9703006},
    {5, 42, 3715408.5996233},
    {6, 34, 19127.72923966},
    {6, 44, -415351.64835634},
    {7, 28, -62.459855192507},
};

// Backward T(p, h), subregion 2b.
inline constexpr Term kBackward2bTph[] = {
    {0, 0, 1489.5041079516},
    {0, 1, 743.07798314034},
    {0, 2, -97.708318797837},
    {0, 12, 2.4742464705674},
    {0, 18, -0.63281320016026},
    {0, 24, 1.1385952129658},
    {0, 28, -0.47811863648625},
    {0, 40, 0.0085208123431544},
    {1, 0, 0.93747147377932},
    {1, 2, 3.3593118604916},
    {1, 6, 3.3809355601454},
    {1, 12, 0.16844539671904},
    {1, 18, 0.73875745236695},
    {1, 24, -0.47128737436186},
    {1, 28, 0.15020273139707},
    {1, 40, -0.002176411421975},
    {2, 2, -0.021810755324761},
    {2, 8, -0.10829784403677},
    {2, 18, -0.046333324635812},
    {2, 40, 7.1280351959551e-05},
    {3, 1, 0.00011032831789999},
    {3, 2, 0.00018955248387902},
    {3, 12, 0.0030891541160537},
    {3, 24, 0.0013555504554949},
    {4, 2, 2.8640237477456e-07},
    {4, 12, -1.0779857357512e-05},
    {4, 18, -7.6462712454814e-05},
    {4, 24, 1.4052392818316e-05},
    {4, 28, -3.1083814331434e-05},
    {4, 40, -1.0302738212103e-06},
    {5, 18, 2.821728163504e-07},
    {5, 24, 1.2704902271945e-06},
    {5, 40, 7.3803353468292e-08},
    {6, 28, -1.1030139238909e-08},
    {7, 2, -8.1456365207833e-14},
    {7, 28, -2.5180545682962e-11},
    {9, 1, -1.7565233969407e-18},
    {9, 40, 8.6934156344163e-15},
};

// Backward T(p, h), subregion 2c.
inline constexpr Term kBackward2cTph[] = {
    {-7, 0, -3236839855524.2},
    {-7, 4, 7326335090218.1},
    {-6, 0, 358250899454.47},
    {-6, 2, -583401318515.9},
    {-5, 0, -10783068217.47},
    {-5, 2, 20825544563.171},
    {-2, 0, 610747.83564516},
    {-2, 1, 859777.2253558},
    {-1, 0, -25745.72360417},
    {-1, 2, 31081.088422714},
    {0, 0, 1208.2315865936},
    {0, 1, 482.19755109255},
    {1, 4, 3.7966001272486},
    {1, 8, -10.842984880077},
    {2, 4, -0.04536417267666},
    {6, 0, 1.4559115658698e-13},
    {6, 1, 1.126159740723e-12},
    {6, 4, -1.7804982240686e-11},
    {6, 10, 1.2324579690832e-07},
    {6, 12, -1.1606921130984e-06},
    {6, 16, 2.7846367088554e-05},
    {6, 20, -0.00059270038474176},
    {6, 22, 0.0012918582991878},
};

}  // namespace turbex::steam::if97
