# Generated by tools/gen_lebedev_table.py; do not edit.
# order -> [((a, b, c), weight), ...] with a >= b >= c >= 0, weights per point.
ORBITS = {
    3: [
        ((1.0, 0.0, 0.0), 0.1666666666666667),
    ],
    5: [
        ((1.0, 0.0, 0.0), 0.06666666666666667),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.075),
    ],
    7: [
        ((1.0, 0.0, 0.0), 0.04761904761904762),
        ((0.7071067811865476, 0.7071067811865476, 0.0), 0.0380952380952381),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.03214285714285714),
    ],
    9: [
        ((1.0, 0.0, 0.0), 0.009523809523809525),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.03214285714285714),
        ((0.8880738339771153, 0.4597008433809831, 0.0), 0.02857142857142857),
    ],
    11: [
        ((1.0, 0.0, 0.0), 0.0126984126984127),
        ((0.7071067811865476, 0.7071067811865476, 0.0), 0.02257495590828924),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.02109375),
        ((0.9045340337332909, 0.3015113445777636, 0.3015113445777636), 0.02017333553791887),
    ],
    17: [
        ((1.0, 0.0, 0.0), 0.0038282704949371615),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.009793737512487513),
        ((0.9651240350865941, 0.1851156353447362, 0.1851156353447362), 0.008211737283191111),
        ((0.6904210483822922, 0.6904210483822922, 0.21595729184584844), 0.009942814891178103),
        ((0.8287699812525923, 0.3956894730559419, 0.3956894730559419), 0.009595471336070962),
        ((0.8781589106040661, 0.4783690288121502, 0.0), 0.009694996361663029),
    ],
    23: [
        ((1.0, 0.0, 0.0), 0.001782340447244611),
        ((0.7071067811865476, 0.7071067811865476, 0.0), 0.005716905949977102),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.005573383178848737),
        ((0.6712973442695226, 0.6712973442695226, 0.3141969941825863), 0.005608704082587997),
        ((0.9125090968674737, 0.2892465627575439, 0.2892465627575439), 0.005158237711805383),
        ((0.7774932193147671, 0.4446933178717437, 0.4446933178717437), 0.005518771467273614),
        ((0.9829723027072532, 0.1299335447650067, 0.1299335447650067), 0.004106777028169394),
        ((0.9383192181375916, 0.3457702197611283, 0.0), 0.005051846064614808),
        ((0.8360360154824589, 0.525118572443642, 0.159041710538353), 0.005530248916233094),
    ],
    29: [
        ((1.0, 0.0, 0.0), 0.0008545911725128148),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.003599119285025571),
        ((0.8676436245440834, 0.3515640345570105, 0.3515640345570105), 0.003449788424305883),
        ((0.6566329410219612, 0.6566329410219612, 0.37103417838482095), 0.003604822601419882),
        ((0.7434520429875557, 0.4729054132581005, 0.4729054132581005), 0.003576729661743367),
        ((0.9907056213794081, 0.09618308522614784, 0.09618308522614784), 0.002352101413689164),
        ((0.9494543172264431, 0.2219645236294178, 0.2219645236294178), 0.003108953122413675),
        ((0.7011766416089545, 0.7011766416089545, 0.12923867271051442), 0.003650045807677255),
        ((0.964408914879206, 0.2644152887060663, 0.0), 0.002982344963171804),
        ((0.8203264198277593, 0.5718955891878961, 0.0), 0.00360082093221646),
        ((0.8000727494073951, 0.5448677372580774, 0.2510034751770465), 0.003571540554273387),
        ((0.9024425295330004, 0.4127724083168531, 0.1233548532583327), 0.00339231220500617),
    ],
    35: [
        ((1.0, 0.0, 0.0), 0.0005265897968224436),
        ((0.7071067811865476, 0.7071067811865476, 0.0), 0.002548219972002607),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.002512317418927307),
        ((0.6909346307509111, 0.6909346307509111, 0.21264682470755186), 0.002530403801186355),
        ((0.9679871587914728, 0.1774836054609158, 0.1774836054609158), 0.002014279020918528),
        ((0.7190165010408435, 0.4914342637784746, 0.4914342637784746), 0.0025017251684029355),
        ((0.6456664707424256, 0.6456664707424256, 0.40771266489776975), 0.002513267174597564),
        ((0.9144728011208725, 0.2861289010307638, 0.2861289010307638), 0.002302694782227416),
        ((0.9942559126312779, 0.07568084367178018, 0.07568084367178018), 0.001462495621594614),
        ((0.8315844004192323, 0.3927259763368002, 0.3927259763368002), 0.00244537343731298),
        ((0.8818132877794288, 0.471598691151316, 0.0), 0.002417442375638981),
        ((0.9776428111182649, 0.2102725228573068, 0.0), 0.001910951282179532),
        ((0.8689460322872412, 0.4502330382582625, 0.2054823696403044), 0.002416930044324775),
        ((0.7999278543857286, 0.5905157048925271, 0.10680182607580488), 0.002512236854563495),
        ((0.7717462626915901, 0.5550152361076807, 0.31042840351665446), 0.002496644054553086),
        ((0.9371809858553722, 0.3344363145343455, 0.09921769636429248), 0.002236607760437849),
    ],
    41: [
        ((1.0, 0.0, 0.0), 0.0003095121295306187),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.001852379698597489),
        ((0.7040954938227469, 0.7040954938227469, 0.09219040707689825), 0.001871790639277744),
        ((0.6807744066455244, 0.6807744066455244, 0.2703560883591648), 0.001858812585438317),
        ((0.6372546939258752, 0.6372546939258752, 0.4333738687771544), 0.0018520288282962132),
        ((0.700768575373573, 0.5044419707800358, 0.5044419707800358), 0.001846715956151242),
        ((0.8028368773352738, 0.4215761784010967, 0.4215761784010967), 0.001818471778162769),
        ((0.8830787279341326, 0.3317920736472123, 0.3317920736472123), 0.001749564657281154),
        ((0.9414141582204025, 0.2384736701421887, 0.2384736701421887), 0.001617210647254411),
        ((0.9784805837626939, 0.1459036449157763, 0.1459036449157763), 0.001384737234851692),
        ((0.9962781297540164, 0.06095034115507196, 0.06095034115507196), 0.000976433116505105),
        ((0.791101929626902, 0.6116843442009876, 0.0), 0.001857161196774078),
        ((0.918045287711454, 0.3964755348199858, 0.0), 0.0017051539963958643),
        ((0.9850133350280019, 0.1724782009907724, 0.0), 0.001300321685886048),
        ((0.7493106119041159, 0.561026380862206, 0.3518280927733519), 0.001842866472905286),
        ((0.8400474883590504, 0.474239284255198, 0.263471665593795), 0.001802658934377451),
        ((0.7803207424799203, 0.598412649788538, 0.1816640840360209), 0.00184983056044366),
        ((0.9092134750923736, 0.3791035407695563, 0.1720795225656878), 0.001713904507106709),
        ((0.9571020743100725, 0.2778673190586244, 0.08213021581932511), 0.001555213603396808),
        ((0.8593798558907212, 0.5033564271075117, 0.08999205842074876), 0.0018022391280085248),
    ],
    47: [
        ((1.0, 0.0, 0.0), 0.0002192942088181184),
        ((0.7071067811865476, 0.7071067811865476, 0.0), 0.00143643361731908),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.001421940344335877),
        ((0.997408677652823, 0.0508720441050236, 0.0508720441050236), 0.0006798123511050501),
        ((0.9847997535723012, 0.1228198790178831, 0.1228198790178831), 0.0009913184235294911),
        ((0.9580366759833914, 0.2026890814408786, 0.2026890814408786), 0.001180207833238949),
        ((0.9153179504831548, 0.2847745156464294, 0.2847745156464294), 0.001296599602080921),
        ((0.8559019286978865, 0.3656719078978026, 0.3656719078978026), 0.001365871427428316),
        ((0.7796213195276351, 0.4428264886713469, 0.4428264886713469), 0.001402988604775325),
        ((0.6866444472641543, 0.5140619627249735, 0.5140619627249735), 0.001418645563595609),
        ((0.6306401219166803, 0.6306401219166803, 0.4523119203136584), 0.001421376741851662),
        ((0.6716883332022612, 0.6716883332022612, 0.31252130500165326), 0.0014239964754909622),
        ((0.6979792685336881, 0.6979792685336881, 0.16015580349882902), 0.001431554042178567),
        ((0.9894775374955985, 0.1446865674195309, 0.0), 0.0009254401499865368),
        ((0.9407768787937587, 0.3390263475411216, 0.0), 0.001250239995053509),
        ((0.8457493051936533, 0.5335804651263506, 0.0), 0.00139436584332923),
        ((0.9693858634984321, 0.2355187894242326, 0.06944024393349413), 0.001127089094671749),
        ((0.8833103605221128, 0.410218247404573, 0.226900410952946), 0.00134575376091067),
        ((0.7793481057026609, 0.6214302417481605, 0.08025574607775339), 0.001424957283316783),
        ((0.9344148270524022, 0.3245284345717394, 0.1467999527896572), 0.00126152334123775),
        ((0.8380641334583124, 0.522448218969663, 0.1571507769824727), 0.001392547106052696),
        ((0.7628406246046698, 0.6017546634089558, 0.2365702993157246), 0.001418761677877656),
        ((0.8972853361328333, 0.4346575516141163, 0.07714815866765733), 0.0013383666844795539),
        ((0.8156092232039754, 0.4908826589037616, 0.306293666621073), 0.001393700862676131),
        ((0.7313007936597657, 0.56487681490995, 0.3822477379524787), 0.0014159147574669317),
    ],
    53: [
        ((1.0, 0.0, 0.0), 0.0001438294190527431),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.001125772288287004),
        ((0.9981553450238465, 0.04292963545341347, 0.04292963545341347), 0.0004948029341949241),
        ((0.9888832243546856, 0.1051426854086404, 0.1051426854086404), 0.0007357990109125469),
        ((0.9688902204347074, 0.1750024867623087, 0.1750024867623087), 0.0008889132771304384),
        ((0.9366027304071631, 0.2477653379650257, 0.2477653379650257), 0.0009888347838921435),
        ((0.8912679426476061, 0.3206567123955957, 0.3206567123955957), 0.001053299681709471),
        ((0.8325967237023519, 0.3916520749849983, 0.3916520749849983), 0.001092778807014578),
        ((0.7605829053152514, 0.4590825874187624, 0.4590825874187624), 0.001114389394063227),
        ((0.6754009691084143, 0.5214563888415861, 0.5214563888415861), 0.001123724788051555),
        ((0.6253170244654199, 0.6253170244654199, 0.4668589056957432), 0.001125239325243814),
        ((0.663792674452317, 0.663792674452317, 0.34461365423743795), 0.001126153271815905),
        ((0.6910410398498301, 0.6910410398498301, 0.2119541518501843), 0.001130286931123841),
        ((0.705290700745776, 0.705290700745776, 0.07162440144995555), 0.001134986534363955),
        ((0.9923235654314901, 0.123668676265799, 0.0), 0.0006823367927109931),
        ((0.9557815124965484, 0.2940777114468387, 0.0), 0.0009454158160447096),
        ((0.8827859807011816, 0.4697753849207649, 0.0), 0.001074429975385679),
        ((0.7737784472573748, 0.6334563241139567, 0.0), 0.001129300086569132),
        ((0.97737272284531, 0.2029128752777523, 0.05974048614181342), 0.0008436884500901952),
        ((0.8770584618658027, 0.4602621942484054, 0.1375760408473636), 0.001075255720448885),
        ((0.7949422999642084, 0.5030673999662036, 0.3391016526336286), 0.001108577236864462),
        ((0.9510201693743899, 0.2817606422442134, 0.127167519143982), 0.0009566475323783357),
        ((0.860143461601762, 0.4331561291720157, 0.2693120740413512), 0.001080663250717391),
        ((0.7671021862205583, 0.6256167358580814, 0.1419786452601918), 0.001126797131196295),
        ((0.922616110730809, 0.3798395216859157, 0.06709284600738255), 0.001022568715358061),
        ((0.8310175524134743, 0.551750542142352, 0.07057738183256172), 0.001108960267713108),
        ((0.7476206108340857, 0.6029619156159187, 0.2783888477882155), 0.001122790653435766),
        ((0.9121183784091215, 0.3589606329589096, 0.1979578938917407), 0.00103240184711746),
        ((0.8187485362810218, 0.5348666438135476, 0.2087307061103274), 0.001107249382283854),
        ((0.7165918454670238, 0.5674997546074373, 0.4055122137872836), 0.001121780048519972),
    ],
    59: [
        ((1.0, 0.0, 0.0), 0.0001105189233267572),
        ((0.7071067811865476, 0.7071067811865476, 0.0), 0.000920523273809074),
        ((0.5773502691896257, 0.5773502691896257, 0.5773502691896257), 0.0009133159786443562),
        ((0.9986206817999193, 0.03712636449657089, 0.03712636449657089), 0.0003690421898017899),
        ((0.9916107397220139, 0.09140060412262223, 0.09140060412262223), 0.000560399092868066),
        ((0.976276606394685, 0.1531077852469906, 0.1531077852469906), 0.0006865297629282609),
        ((0.9512470674805785, 0.2180928891660612, 0.2180928891660612), 0.0007720338551145631),
        ((0.9158068862086683, 0.2839874532200175, 0.2839874532200175), 0.0008301545958894795),
        ((0.869616915181954, 0.3491177600963764, 0.3491177600963764), 0.0008686692550179627),
        ((0.8125737222999156, 0.4121431461444309, 0.4121431461444309), 0.000892707628584689),
        ((0.7447294696321065, 0.4718993627149127, 0.4718993627149127), 0.0009060820238568218),
        ((0.6662422537361044, 0.5273145452842337, 0.5273145452842337), 0.0009119777254940867),
        ((0.6209475332444019, 0.6209475332444019, 0.47838093807695226), 0.0009128720138604181),
        ((0.6569722711857291, 0.6569722711857291, 0.3698308664594258), 0.0009130714935691735),
        ((0.6841788309070143, 0.6841788309070143, 0.2525839557007183), 0.0009152873784554116),
        ((0.7012604330123631, 0.7012604330123631, 0.12832618665972312), 0.0009187436274321654),
        ((0.9942333548213224, 0.1072382215478166, 0.0), 0.0005176977312965694),
        ((0.966089643296119, 0.2582068959496968, 0.0), 0.0007331143682101417),
        ((0.9087801316819105, 0.4172752955306717, 0.0), 0.0008463232836379928),
        ((0.8216192370614335, 0.5700366911792503, 0.0), 0.0009031122694253992),
        ((0.9827986018263947, 0.1771774022615325, 0.052106394770112544), 0.0006485778453163257),
        ((0.9624249230326228, 0.2475716463426288, 0.11156409571564851), 0.0007435030910982369),
        ((0.9402007994128811, 0.3354616289066489, 0.05905888853235372), 0.0007998527891839054),
        ((0.9320822040143202, 0.3173615246611977, 0.17465516775786288), 0.0008101731497468018),
        ((0.9043674199393299, 0.4090268427085357, 0.1217235051095989), 0.000848338957459433),
        ((0.8912407560074747, 0.3854291150669224, 0.23902784793817244), 0.0008556299257311812),
        ((0.8676435628462708, 0.4932221184851285, 0.06266250624154199), 0.0008803208679738259),
        ((0.8581979986041619, 0.4785320675922435, 0.18575051945473373), 0.000881104818242572),
        ((0.8396753624049856, 0.4507422593157064, 0.3029466973528983), 0.0008850282341265444),
        ((0.8165288564022188, 0.56321230207621, 0.12677748006842818), 0.0009021342299040653),
        ((0.8015469370783529, 0.54343035696939, 0.24941121623622375), 0.0009010091677105086),
        ((0.777356306907035, 0.5123518486419871, 0.3649832260597654), 0.0009022692938426915),
        ((0.7661621213900394, 0.6394279634749102, 0.06424549224220785), 0.0009158016174693465),
        ((0.755358414353351, 0.6269805509024392, 0.19060182227792313), 0.0009131578003189435),
        ((0.7344305757559503, 0.603116169309631, 0.3112275947149608), 0.0009107813579482705),
        ((0.7043837184021765, 0.5693702498468441, 0.4238644781522338), 0.0009105760258970126),
    ],
}
