"""Upper-tail chi-square quantiles at significance 0.001, df = 1..1100.

Generated by tools/gen_chi2_table.py; do not edit by hand.
"""

ALPHA = 0.001
MAX_DF = 1100

# QUANTILES[df - 1] is the critical value for df degrees of freedom
QUANTILES = (
    10.827566170662733,
    13.815510557964274,
    16.26623619623813,
    18.466826952903173,
    20.515005652432876,
    22.457744484825323,
    24.321886347856854,
    26.124481558376143,
    27.877164871256575,
    29.58829844507442,
    31.26413362023999,
    32.90949040736021,
    34.52817897487089,
    36.12327368039814,
    37.69729821835383,
    39.25235479076848,
    40.79021670690253,
    42.31239633167997,
    43.82019596451753,
    45.31474661812587,
    46.7970380415613,
    48.26794229083519,
    49.72823246643151,
    51.17859777737739,
    52.61965577617283,
    54.051962388576655,
    55.47602020574521,
    56.892285393353625,
    58.30117348979492,
    59.703064304429944,
    61.09830608105814,
    62.487219057088495,
    63.87009852234495,
    65.24721746094242,
    66.61882884370104,
    67.98516762602424,
    69.3464524962412,
    70.70288741150503,
    72.0546629519878,
    73.40195751899103,
    74.74493839842374,
    76.08376270770003,
    77.41857824131394,
    78.74952422804303,
    80.07673201081901,
    81.40032565871002,
    82.72042251912403,
    84.0371337172235,
    85.350564608593,
    86.66081519040317,
    87.96798047562868,
    89.27215083430448,
    90.57341230529862,
    91.8718468816601,
    93.16753277222854,
    94.46054464187806,
    95.75095383248951,
    97.03882856650873,
    98.32423413474163,
    99.60723306984946,
    100.88788530685825,
    102.1662483318488,
    103.44237731987324,
    104.71632526304059,
    105.98814308961282,
    107.25787977487073,
    108.52558244443482,
    109.79129647066173,
    111.05506556267146,
    112.31693185051567,
    113.57693596394476,
    114.8351171061933,
    116.09151312316096,
    117.34616056833924,
    118.59909476379528,
    119.85034985750525,
    121.09995887729859,
    122.34795378165677,
    123.59436550758484,
    124.83922401576478,
    126.08255833316953,
    127.32439659331791,
    128.56476607432293,
    129.80369323488026,
    131.04120374833505,
    132.27732253494605,
    133.51207379246577,
    134.74548102514225,
    135.97756707124037,
    137.20835412917324,
    138.437863782331,
    139.66611702268347,
    140.8931342732306,
    142.11893540936777,
    143.34353977923126,
    144.5669662230828,
    145.7892330917839,
    147.01035826441748,
    148.23035916510173,
    149.4492527790389,
    150.66705566784537,
    151.88378398420096,
    153.09945348584785,
    154.31407954898626,
    155.5276771810864,
    156.740261033153,
    157.95184541147285,
    159.1624442888655,
    160.37207131546973,
    161.58073982908175,
    162.78846286507468,
    163.99525316591323,
    165.2011231902913,
    166.40608512190016,
    167.61015087785867,
    168.81333211680516,
    170.01564024668554,
    171.21708643223513,
    172.41768160217916,
    173.61743645616,
    174.81636147140676,
    176.01446690915446,
    177.21176282083061,
    178.4082590540126,
    179.60396525816927,
    180.79889089020088,
    181.99304521977317,
    183.1864373344724,
    184.37907614477078,
    185.570970388825,
    186.7621286371068,
    187.9525592968732,
    189.14227061648646,
    190.33127068958913,
    191.5195674591372,
    192.70716872129785,
    193.89408212922336,
    195.0803151966945,
    196.26587530165207,
    197.45076968960848,
    198.63500547695546,
    199.81858965415918,
    201.00152908886182,
    202.1838305288837,
    203.36550060512525,
    204.54654583438807,
    205.72697262210653,
    206.90678726498922,
    208.08599595359124,
    209.26460477480072,
    210.44261971425405,
    211.62004665867846,
    212.79689139816605,
    213.97315962838024,
    215.1488569526981,
    216.32398888429128,
    217.4985608481457,
    218.67257818302434,
    219.8460461433745,
    221.01896990118007,
    222.19135454776256,
    223.36320509553184,
    224.53452647968817,
    225.70532355987717,
    226.87560112179972,
    228.0453638787779,
    229.21461647327857,
    230.38336347839578,
    231.55160939929385,
    232.7193586746119,
    233.88661567783117,
    235.05338471860654,
    236.21967004406332,
    237.3854758400602,
    238.55080623241983,
    239.71566528812733,
    240.8800570164986,
    242.0439853703191,
    243.20745424695346,
    244.37046748942743,
    245.53302888748277,
    246.69514217860618,
    247.85681104903273,
    249.01803913472386,
    250.1788300223234,
    251.3391872500879,
    252.49911430879683,
    253.65861464263895,
    254.81769165007918,
    255.97634868470323,
    257.134589056044,
    258.2924160303867,
    259.4498328315565,
    260.60684264168765,
    261.7634486019739,
    262.91965381340265,
    264.0754613374717,
    265.23087419689,
    266.38589537626206,
    267.5405278227572,
    268.69477444676386,
    269.8486381225289,
    271.00212168878335,
    272.15522794935316,
    273.30795967375786,
    274.46031959779503,
    275.61231042411265,
    276.7639348227687,
    277.91519543177884,
    279.06609485765216,
    280.2166356759154,
    281.36682043162676,
    282.51665163987724,
    283.66613178628336,
    284.8152633274678,
    285.9640486915314,
    287.11249027851375,
    288.26059046084623,
    289.408351583794,
    290.5557759658896,
    291.70286589935785,
    292.8496236505319,
    293.9960514602606,
    295.1421515443086,
    296.28792609374676,
    297.4333772753368,
    298.5785072319062,
    299.723318082718,
    300.8678119238308,
    302.01199082845386,
    303.15585684729365,
    304.29941200889493,
    305.44265831997444,
    306.58559776574805,
    307.7282323102524,
    308.8705638966596,
    310.0125944475865,
    311.15432586539765,
    312.2957600325029,
    313.4368988116489,
    314.577744046206,
    315.7182975604492,
    316.8585611598332,
    317.99853663126413,
    319.1382257433653,
    320.2776302467366,
    321.4167518742126,
    322.5555923411123,
    323.6941533454872,
    324.832436568363,
    325.9704436739779,
    327.10817631001635,
    328.2456361078388,
    329.38282468270694,
    330.51974363400586,
    331.65639454546084,
    332.792778985352,
    333.9288985067239,
    335.064754647592,
    336.20034893114575,
    337.3356828659478,
    338.4707579461297,
    339.6055756515849,
    340.7401374481575,
    341.87444478782874,
    343.00849910889946,
    344.14230183617025,
    345.2758543811179,
    346.4091581420694,
    347.5422145043729,
    348.67502484056536,
    349.8075905105384,
    350.9399128617002,
    352.0719932291357,
    353.2038329357641,
    354.3354332924929,
    355.4667955983703,
    356.5979211407352,
    357.7288111953638,
    358.85946702661516,
    359.9898898875733,
    361.12008102018774,
    362.25004165541105,
    363.3797730133354,
    364.5092763033259,
    365.638552724152,
    366.76760346411726,
    367.8964297011868,
    369.02503260311283,
    370.153413327558,
    371.2815730222173,
    372.40951282493756,
    373.5372338638357,
    374.6647372574143,
    375.79202411467656,
    376.9190955352382,
    378.04595260943915,
    379.17259641845186,
    380.2990280343895,
    381.4252485204115,
    382.55125893082834,
    383.67706031120383,
    384.80265369845654,
    385.9280401209598,
    387.0532205986397,
    388.17819614307194,
    389.3029677575773,
    390.42753643731567,
    391.5519031693787,
    392.6760689328811,
    393.80003469905034,
    394.9238014313157,
    396.0473700853956,
    397.1707416093833,
    398.29391694383236,
    399.4168970218401,
    400.53968276912997,
    401.66227510413313,
    402.7846749380683,
    403.9068831750211,
    405.0289007120221,
    406.15072843912304,
    407.27236723947345,
    408.39381798939456,
    409.5150815584536,
    410.6361588095361,
    411.75705059891783,
    412.87775777633505,
    413.9982811850548,
    415.118621661943,
    416.23878003753293,
    417.3587571360916,
    418.47855377568595,
    419.598170768248,
    420.717608919639,
    421.8368690297129,
    422.9559518923785,
    424.07485829566167,
    425.19358902176583,
    426.31214484713206,
    427.43052654249857,
    428.5487348729588,
    429.6667705980195,
    430.78463447165757,
    431.902327242376,
    433.0198496532597,
    434.13720244203023,
    435.2543863410995,
    436.37140207762366,
    437.4882503735551,
    438.60493194569506,
    439.72144750574455,
    440.83779776035516,
    441.953983411179,
    443.07000515491825,
    444.1858636833737,
    445.30155968349305,
    446.4170938374183,
    447.53246682253285,
    448.6476793115077,
    449.7627319723474,
    450.87762546843504,
    451.992360458577,
    453.106937597047,
    454.22135753362977,
    455.3356209136639,
    456.4497283780842,
    457.5636805634641,
    458.67747810205674,
    459.7911216218358,
    460.9046117465363,
    462.01794909569446,
    463.1311342846868,
    464.24416792476984,
    465.3570506231177,
    466.46978298286103,
    467.58236560312423,
    468.6947990790624,
    469.8070840018986,
    470.91922095895956,
    472.03121053371194,
    473.14305330579754,
    474.2547498510685,
    475.36630074162156,
    476.4777065458327,
    477.5889678283906,
    478.70008515033015,
    479.8110590690656,
    480.92189013842295,
    482.03257890867224,
    483.1431259265597,
    484.253531735339,
    485.3637968748024,
    486.4739218813118,
    487.5839072878289,
    488.69375362394527,
    489.8034614159127,
    490.91303118667173,
    492.02246345588145,
    493.1317587399478,
    494.2409175520524,
    495.3499404021804,
    496.4588277971484,
    497.56758024063174,
    498.67619823319205,
    499.7846822723039,
    500.8930328523813,
    502.0012504648043,
    503.1093355979447,
    504.217288737192,
    505.3251103649786,
    506.4328009608052,
    507.5403610012654,
    508.6477909600707,
    509.75509130807455,
    510.86226251329646,
    511.9693050409458,
    513.0762193534458,
    514.183005910456,
    515.2896651688964,
    516.396197582969,
    517.5026036041814,
    518.6088836813693,
    519.7150382607172,
    520.8210677857816,
    521.9269726975122,
    523.032753434273,
    524.1384104318643,
    525.2439441235423,
    526.3493549400414,
    527.4546433095935,
    528.5598096579488,
    529.6648544083959,
    530.7697779817817,
    531.8745807965307,
    532.9792632686652,
    534.0838258118238,
    535.1882688372809,
    536.2925927539656,
    537.3967979684799,
    538.5008848851181,
    539.6048539058842,
    540.7087054305106,
    541.8124398564755,
    542.9160575790213,
    544.0195589911717,
    545.1229444837493,
    546.2262144453928,
    547.3293692625737,
    548.4324093196138,
    549.5353349987017,
    550.6381466799089,
    551.7408447412068,
    552.8434295584824,
    553.9459015055546,
    555.0482609541905,
    556.1505082741202,
    557.252643833053,
    558.354667996693,
    559.456581128754,
    560.5583835909745,
    561.6600757431333,
    562.7616579430638,
    563.8631305466688,
    564.9644939079352,
    566.0657483789483,
    567.1668943099062,
    568.2679320491336,
    569.368861943096,
    570.469684336414,
    571.5703995718764,
    572.6710079904535,
    573.771509931312,
    574.8719057318269,
    575.9721957275952,
    577.0723802524493,
    578.1724596384695,
    579.2724342159971,
    580.3723043136472,
    581.472070258321,
    582.5717323752186,
    583.6712909878511,
    584.770746418053,
    585.8700989859946,
    586.9693490101934,
    588.0684968075265,
    589.1675426932422,
    590.266486980972,
    591.3653299827419,
    592.4640720089836,
    593.5627133685466,
    594.6612543687091,
    595.7596953151889,
    596.858036512155,
    597.9562782622379,
    599.0544208665412,
    600.1524646246523,
    601.2504098346521,
    602.3482567931268,
    603.4460057951776,
    604.5436571344316,
    605.6412111030515,
    606.7386679917465,
    607.8360280897817,
    608.9332916849888,
    610.0304590637755,
    611.1275305111354,
    612.2245063106583,
    613.321386744539,
    614.4181720935876,
    615.5148626372387,
    616.6114586535608,
    617.7079604192659,
    618.8043682097181,
    619.9006822989435,
    620.9969029596391,
    622.0930304631813,
    623.1890650796356,
    624.285007077765,
    625.3808567250387,
    626.476614287641,
    627.5722800304802,
    628.6678542171965,
    629.7633371101707,
    630.8587289705332,
    631.9540300581715,
    633.0492406317388,
    634.1443609486624,
    635.2393912651515,
    636.3343318362056,
    637.4291829156218,
    638.5239447560036,
    639.6186176087683,
    640.7132017241546,
    641.8076973512307,
    642.9021047379017,
    643.9964241309175,
    645.0906557758797,
    646.1847999172497,
    647.2788567983561,
    648.3728266614012,
    649.4667097474696,
    650.5605062965342,
    651.6542165474638,
    652.7478407380307,
    653.841379104917,
    654.9348318837219,
    656.0281993089686,
    657.1214816141112,
    658.2146790315414,
    659.3077917925956,
    660.4008201275609,
    661.4937642656826,
    662.58662443517,
    663.6794008632037,
    664.7720937759415,
    665.8647033985249,
    666.9572299550856,
    668.0496736687523,
    669.1420347616562,
    670.2343134549373,
    671.3265099687511,
    672.4186245222745,
    673.5106573337118,
    674.6026086203007,
    675.6944785983183,
    676.7862674830872,
    677.8779754889811,
    678.9696028294312,
    680.061149716931,
    681.1526163630433,
    682.244002978405,
    683.3353097727327,
    684.4265369548292,
    685.5176847325881,
    686.608753313,
    687.6997429021577,
    688.7906537052613,
    689.8814859266246,
    690.9722397696792,
    692.0629154369809,
    693.1535131302144,
    694.2440330501984,
    695.3344753968913,
    696.4248403693962,
    697.5151281659655,
    698.605338984007,
    699.6954730200875,
    700.7855304699395,
    701.8755115284648,
    702.9654163897399,
    704.0552452470209,
    705.1449982927486,
    706.2346757185527,
    707.3242777152572,
    708.4138044728847,
    709.5032561806613,
    710.5926330270212,
    711.6819351996114,
    712.7711628852962,
    713.8603162701621,
    714.9493955395214,
    716.0384008779182,
    717.1273324691314,
    718.2161904961797,
    719.3049751413264,
    720.3936865860832,
    721.4823250112147,
    722.5708905967427,
    723.6593835219506,
    724.7478039653874,
    725.8361521048721,
    726.9244281174977,
    728.0126321796355,
    729.1007644669392,
    730.1888251543487,
    731.2768144160947,
    732.3647324257023,
    733.4525793559949,
    734.5403553790985,
    735.6280606664457,
    736.7156953887788,
    737.8032597161551,
    738.8907538179494,
    739.9781778628584,
    741.0655320189045,
    742.1528164534396,
    743.2400313331487,
    744.3271768240536,
    745.4142530915168,
    746.5012603002449,
    747.5881986142923,
    748.6750681970651,
    749.7618692113243,
    750.8486018191896,
    751.9352661821426,
    753.0218624610308,
    754.1083908160707,
    755.1948514068515,
    756.2812443923383,
    757.3675699308758,
    758.4538281801913,
    759.5400192973984,
    760.6261434390003,
    761.7122007608931,
    762.7981914183686,
    763.8841155661186,
    764.9699733582369,
    766.0557649482239,
    767.1414904889884,
    768.227150132852,
    769.3127440315512,
    770.3982723362416,
    771.4837351975,
    772.5691327653283,
    773.6544651891559,
    774.7397326178433,
    775.8249351996849,
    776.9100730824119,
    777.9951464131956,
    779.0801553386501,
    780.1651000048352,
    781.2499805572595,
    782.3347971408834,
    783.4195499001219,
    784.5042389788471,
    785.5888645203914,
    786.6734266675508,
    787.7579255625866,
    788.8423613472291,
    789.9267341626802,
    791.0110441496157,
    792.0952914481886,
    793.1794761980317,
    794.2635985382598,
    795.347658607473,
    796.4316565437593,
    797.5155924846968,
    798.5994665673567,
    799.6832789283059,
    800.7670297036094,
    801.8507190288332,
    802.9343470390464,
    804.0179138688242,
    805.1014196522499,
    806.1848645229184,
    807.2682486139372,
    808.3515720579303,
    809.4348349870398,
    810.5180375329289,
    811.6011798267837,
    812.684261999316,
    813.767284180766,
    814.8502465009038,
    815.9331490890328,
    817.0159920739914,
    818.0987755841552,
    819.18149974744,
    820.2641646913036,
    821.3467705427481,
    822.4293174283224,
    823.5118054741245,
    824.594234805803,
    825.6766055485607,
    826.7589178271555,
    827.8411717659035,
    828.9233674886806,
    830.005505118925,
    831.0875847796393,
    832.1696065933926,
    833.2515706823228,
    834.3334771681384,
    835.415326172121,
    836.4971178151269,
    837.5788522175898,
    838.6605294995222,
    839.7421497805183,
    840.823713179755,
    841.9052198159949,
    842.9866698075876,
    844.0680632724723,
    845.149400328179,
    846.2306810918316,
    847.3119056801487,
    848.3930742094465,
    849.47418679564,
    850.5552435542454,
    851.636244600382,
    852.717190048774,
    853.7980800137523,
    854.8789146092562,
    855.9596939488362,
    857.0404181456545,
    858.1210873124882,
    859.2017015617299,
    860.2822610053908,
    861.3627657551011,
    862.4432159221133,
    863.5236116173024,
    864.6039529511694,
    865.6842400338415,
    866.7644729750751,
    867.8446518842565,
    868.9247768704045,
    870.0048480421716,
    871.0848655078461,
    872.1648293753532,
    873.2447397522577,
    874.3245967457647,
    875.4044004627215,
    876.48415100962,
    877.5638484925972,
    878.6434930174378,
    879.7230846895754,
    880.8026236140944,
    881.882109895731,
    882.9615436388756,
    884.0409249475738,
    885.1202539255285,
    886.1995306761008,
    887.2787553023127,
    888.3579279068471,
    889.4370485920506,
    890.5161174599348,
    891.5951346121773,
    892.674100150124,
    893.7530141747899,
    894.831876786861,
    895.9106880866958,
    896.9894481743266,
    898.0681571494613,
    899.1468151114846,
    900.2254221594591,
    901.3039783921279,
    902.3824839079149,
    903.4609388049267,
    904.5393431809541,
    905.6176971334735,
    906.696000759648,
    907.7742541563291,
    908.8524574200583,
    909.9306106470681,
    911.0087139332833,
    912.0867673743228,
    913.1647710655008,
    914.2427251018279,
    915.3206295780129,
    916.3984845884638,
    917.4762902272893,
    918.5540465882998,
    919.6317537650093,
    920.7094118506365,
    921.7870209381055,
    922.8645811200479,
    923.9420924888041,
    925.0195551364237,
    926.0969691546677,
    927.1743346350094,
    928.2516516686355,
    929.3289203464478,
    930.4061407590639,
    931.4833129968189,
    932.5604371497665,
    933.6375133076799,
    934.7145415600536,
    935.7915219961042,
    936.8684547047717,
    937.9453397747207,
    939.0221772943416,
    940.0989673517521,
    941.1757100347975,
    942.2524054310529,
    943.3290536278237,
    944.405654712147,
    945.4822087707929,
    946.5587158902653,
    947.6351761568031,
    948.7115896563818,
    949.7879564747138,
    950.8642766972505,
    951.9405504091826,
    953.0167776954415,
    954.0929586407007,
    955.1690933293762,
    956.2451818456285,
    957.3212242733626,
    958.3972206962305,
    959.4731711976307,
    960.5490758607102,
    961.6249347683656,
    962.7007480032439,
    963.7765156477435,
    964.8522377840152,
    965.9279144939636,
    967.0035458592478,
    968.0791319612825,
    969.1546728812393,
    970.230168700047,
    971.3056194983938,
    972.3810253567266,
    973.456386355254,
    974.5317025739457,
    975.6069740925342,
    976.6822009905158,
    977.7573833471511,
    978.8325212414668,
    979.9076147522558,
    980.9826639580787,
    982.0576689372646,
    983.132629767912,
    984.2075465278899,
    985.2824192948389,
    986.3572481461712,
    987.4320331590728,
    988.5067744105038,
    989.5814719771992,
    990.65612593567,
    991.7307363622044,
    992.8053033328682,
    993.8798269235058,
    994.9543072097415,
    996.02874426698,
    997.1031381704074,
    998.1774889949924,
    999.251796815486,
    1000.3260617064245,
    1001.4002837421282,
    1002.4744629967036,
    1003.5485995440437,
    1004.6226934578291,
    1005.6967448115288,
    1006.770753678401,
    1007.844720131494,
    1008.918644243647,
    1009.9925260874908,
    1011.066365735449,
    1012.1401632597386,
    1013.2139187323708,
    1014.2876322251515,
    1015.3613038096831,
    1016.4349335573644,
    1017.5085215393914,
    1018.5820678267588,
    1019.6555724902604,
    1020.7290356004895,
    1021.8024572278405,
    1022.8758374425089,
    1023.9491763144929,
    1025.022473913593,
    1026.0957303094144,
    1027.1689455713665,
    1028.2421197686635,
    1029.3152529703266,
    1030.3883452451832,
    1031.4613966618685,
    1032.5344072888265,
    1033.60737719431,
    1034.6803064463809,
    1035.753195112913,
    1036.826043261591,
    1037.8988509599112,
    1038.9716182751833,
    1040.04434527453,
    1041.1170320248889,
    1042.1896785930119,
    1043.2622850454668,
    1044.3348514486383,
    1045.4073778687277,
    1046.479864371754,
    1047.5523110235551,
    1048.6247178897881,
    1049.6970850359296,
    1050.769412527277,
    1051.8417004289493,
    1052.9139488058868,
    1053.9861577228532,
    1055.0583272444353,
    1056.1304574350434,
    1057.202548358913,
    1058.2746000801046,
    1059.3466126625053,
    1060.4185861698281,
    1061.4905206656138,
    1062.562416213231,
    1063.634272875877,
    1064.7060907165785,
    1065.7778697981917,
    1066.8496101834037,
    1067.9213119347328,
    1068.9929751145291,
    1070.0645997849751,
    1071.1361860080865,
    1072.2077338457125,
    1073.2792433595368,
    1074.3507146110785,
    1075.4221476616913,
    1076.4935425725657,
    1077.5648994047294,
    1078.636218219047,
    1079.707499076221,
    1080.778742036793,
    1081.849947161143,
    1082.9211145094923,
    1083.9922441419012,
    1085.0633361182715,
    1086.1343904983469,
    1087.205407341713,
    1088.2763867077979,
    1089.3473286558738,
    1090.4182332450562,
    1091.489100534305,
    1092.5599305824257,
    1093.6307234480694,
    1094.701479189733,
    1095.7721978657603,
    1096.8428795343427,
    1097.9135242535192,
    1098.9841320811774,
    1100.054703075054,
    1101.125237292735,
    1102.1957347916564,
    1103.2661956291056,
    1104.3366198622202,
    1105.4070075479901,
    1106.4773587432576,
    1107.5476735047175,
    1108.6179518889178,
    1109.6881939522607,
    1110.7583997510028,
    1111.8285693412554,
    1112.8987027789851,
    1113.9688001200154,
    1115.0388614200251,
    1116.1088867345504,
    1117.1788761189855,
    1118.2488296285821,
    1119.3187473184505,
    1120.3886292435602,
    1121.4584754587402,
    1122.5282860186794,
    1123.5980609779276,
    1124.6678003908953,
    1125.7375043118548,
    1126.8071727949398,
    1127.8768058941475,
    1128.9464036633376,
    1130.0159661562332,
    1131.0854934264214,
    1132.154985527354,
    1133.2244425123479,
    1134.2938644345845,
    1135.3632513471123,
    1136.4326033028453,
    1137.5019203545646,
    1138.571202554919,
    1139.6404499564244,
    1140.7096626114653,
    1141.778840572295,
    1142.8479838910355,
    1143.9170926196791,
    1144.9861668100878,
    1146.055206513994,
    1147.1242117830013,
    1148.1931826685845,
    1149.2621192220909,
    1150.3310214947392,
    1151.3998895376212,
    1152.4687234017026,
    1153.537523137822,
    1154.606288796692,
    1155.6750204289006,
    1156.7437180849097,
    1157.812381815057,
    1158.8810116695568,
    1159.949607698498,
    1161.018169951848,
    1162.0866984794498,
    1163.1551933310247,
    1164.2236545561718,
    1165.292082204369,
    1166.360476324972,
    1167.4288369672165,
    1168.4971641802174,
    1169.56545801297,
    1170.6337185143498,
    1171.701945733113,
    1172.7701397178973,
    1173.8383005172218,
    1174.906428179488,
    1175.97452275298,
    1177.0425842858635,
    1178.1106128261895,
    1179.1786084218907,
    1180.246571120785,
    1181.314500970574,
    1182.3823980188452,
    1183.4502623130702,
    1184.5180939006068,
    1185.5858928286984,
    1186.6536591444756,
    1187.7213928949545,
    1188.7890941270393,
    1189.8567628875214,
    1190.9243992230802,
    1191.992003180283,
    1193.0595748055862,
    1194.1271141453349,
    1195.1946212457638,
    1196.2620961529972,
    1197.3295389130496,
    1198.3969495718259,
    1199.464328175122,
    1200.531674768625,
    1201.5989893979133,
    1202.6662721084576,
    1203.7335229456205,
    1204.8007419546577,
    1205.8679291807177,
    1206.9350846688424,
    1208.0022084639672,
    1209.0693006109218,
    1210.1363611544302,
    1211.2033901391112,
    1212.2703876094788,
    1213.337353609942,
    1214.4042881848065,
    1215.4711913782733,
    1216.5380632344402,
    1217.6049037973016,
    1218.6717131107496,
    1219.7384912185732,
    1220.8052381644595,
    1221.8719539919937,
    1222.9386387446593,
    1224.0052924658394,
    1225.071915198815,
    1226.1385069867677,
    1227.2050678727783,
    1228.2715978998278,
    1229.338097110798,
    1230.404565548471,
    1231.4710032555304,
    1232.537410274561,
    1233.603786648049,
    1234.6701324183837,
    1235.7364476278556,
    1236.8027323186584,
    1237.868986532889,
    1238.9352103125473,
    1240.001403699537,
    1241.0675667356654,
    1242.1336994626442,
    1243.1998019220903,
    1244.2658741555244,
    1245.3319162043729,
    1246.3979281099673,
    1247.4639099135459,
    1248.5298616562516,
    1249.5957833791344,
    1250.6616751231513,
)
