// Generated by examples/gen_tw1_table.rs; do not edit.
// F_1(s) at s = -10 + k * 0.005, k = 0..3200, up to s = 6.

#[rustfmt::skip]
pub(super) static TW1_TABLE: [f64; 3201] = [
    1.2295808972535847e-21, 1.2949727289583427e-21, 1.3638879162690748e-21, 1.4365200363827846e-21,
    1.513073554297975e-21, 1.5937644498403846e-21, 1.6788208815216614e-21, 1.7684838894234984e-21,
    1.863008139430288e-21, 1.9626627112732364e-21, 2.0677319329951792e-21, 2.178516264602463e-21,
    2.2953332338346937e-21, 2.4185184271591925e-21, 2.5484265392820635e-21, 2.685432484664804e-21,
    2.8299325747439517e-21, 2.98234576477143e-21, 3.1431149744282023e-21, 3.3127084866106954e-21,
    3.4916214290524184e-21, 3.680377343721158e-21, 3.8795298492270556e-21, 4.089664401788155e-21,
    4.31140016063093e-21, 4.5453919640532125e-21, 4.792332422748131e-21, 5.052954137378074e-21,
    5.328032047807347e-21, 5.618385921837628e-21, 5.924882991760264e-21, 6.2484407475317744e-21,
    6.5900298958999144e-21, 6.950677495363885e-21, 7.3314702774359e-21, 7.733558165291926e-21,
    8.158158001556391e-21, 8.606557497660523e-21, 9.08011941794917e-21, 9.580286012489529e-21,
    1.0108583713360483e-20, 1.066662811007202e-20, 1.1256129220687688e-20, 1.187889707620132e-20,
    1.2536847636750474e-20, 1.3232009059345153e-20, 1.3966528337947064e-20, 1.4742678337957838e-20,
    1.5562865248474566e-20, 1.6429636477034065e-20, 1.7345689013027248e-20, 1.8313878287491303e-20,
    1.933722755861101e-20, 2.041893785398149e-20, 2.1562398502493592e-20, 2.2771198290627956e-20,
    2.4049137279971476e-20, 2.5400239324916485e-20, 2.682876533177415e-20, 2.8339227302939315e-20,
    2.9936403212266376e-20, 3.1625352760521905e-20, 3.341143406259793e-20, 3.530032132117754e-20,
    3.7298023544714685e-20, 3.9410904370936885e-20, 4.16457030606303e-20, 4.4009556730196746e-20,
    4.651002389544563e-20, 4.9155109403246066e-20, 5.195329083210402e-20, 5.491354644737291e-20,
    5.80453848017688e-20, 6.135887607704054e-20, 6.486468526818112e-20, 6.857410731736116e-20,
    7.249910431092787e-20, 7.665234485928381e-20, 8.104724578633556e-20, 8.569801626243058e-20,
    9.061970452234483e-20, 9.582824731797615e-20, 1.013405222639027e-19, 1.0717440324298535e-19,
    1.1334881904870411e-19, 1.1988381545092952e-19, 1.2680062088246983e-19, 1.3412171595487273e-19,
    1.4187090702380937e-19, 1.5007340403681932e-19, 1.587559029093287e-19, 1.6794667268877707e-19,
    1.7767564778131435e-19, 1.8797452553100088e-19, 1.9887686945776108e-19, 2.104182184775544e-19,
    2.226362024463952e-19, 2.3557066438901283e-19, 2.492637897931493e-19, 2.637602433718833e-19,
    2.7910731371874057e-19, 2.95355066304206e-19, 3.1255650528720553e-19, 3.307677446415317e-19,
    3.5004818912502177e-19, 3.7046072564866434e-19, 3.920719256337082e-19, 4.1495225897753636e-19,
    4.391763202834179e-19, 4.648230680455257e-19, 4.919760775188688e-19, 5.207238080440409e-19,
    5.511598856391818e-19, 5.833834017163362e-19, 6.174992288264885e-19, 6.536183543874264e-19,
    6.918582334007989e-19, 7.323431612199966e-19, 7.752046674888573e-19, 8.205819324320198e-19,
    8.686222267428156e-19, 9.194813763822226e-19, 9.733242536742194e-19, 1.0303252961584007e-18,
    1.090669054739794e-18, 1.1545507727602044e-18, 1.222176997702715e-18, 1.2937662273346321e-18,
    1.3695495921910804e-18, 1.4497715764050868e-18, 1.5346907789977624e-18, 1.6245807178565982e-18,
    1.7197306787496982e-18, 1.8204466118503198e-18, 1.9270520783791637e-18, 2.0398892501115272e-18,
    2.1593199646442126e-18, 2.285726839471711e-18, 2.4195144480848196e-18, 2.5611105614758996e-18,
    2.7109674586164776e-18, 2.8695633096619123e-18, 3.037403635838586e-18, 3.2150228501792243e-18,
    3.4029858834929706e-18, 3.601889900189302e-18, 3.812366108820573e-18, 4.035081672464249e-18,
    4.270741724337334e-18, 4.5200914943194795e-18, 4.783918552361152e-18, 5.063055175067673e-18,
    5.3583808420802896e-18, 5.670824869224443e-18, 6.001369185758809e-18, 6.351051263446038e-18,
    6.720967205566741e-18, 7.112275004425656e-18, 7.52619797634268e-18, 7.964028383592786e-18,
    8.42713125324793e-18, 8.916948403396554e-18, 9.435002687755372e-18, 9.982902470262772e-18,
    1.0562346341841534e-17, 1.1175128092151186e-17, 1.18231419498102e-17, 1.2508388105265003e-17,
    1.323297853121586e-17, 1.399914311627129e-17, 1.480923612831527e-17, 1.5665743024911115e-17,
    1.6571287628961338e-17, 1.7528639688768162e-17, 1.8540722842625076e-17, 1.961062300909321e-17,
    2.0741597225199624e-17, 2.1937082955922832e-17, 2.320070789952506e-17, 2.4536300314533626e-17,
    2.5947899895486478e-17, 2.7439769225931738e-17, 2.901640583860846e-17, 3.068255491425625e-17,
    3.244322265208259e-17, 3.4303690346582925e-17, 3.626952920716183e-17, 3.8346615958828354e-17,
    4.054114926416261e-17, 4.285966700877597e-17, 4.5309064494586684e-17, 4.789661358746409e-17,
    5.0629982868112154e-17, 5.351725883750603e-17, 5.656696823074607e-17, 5.978810149588692e-17,
    6.319013749709264e-17, 6.678306950443123e-17, 7.057743253569613e-17, 7.458433211889566e-17,
    7.881547454742847e-17, 8.328319870352277e-17, 8.800050952926149e-17, 9.29811132283837e-17,
    9.823945428618779e-17, 1.0379075439911723e-16, 1.0965105341010881e-16, 1.1583725235051096e-16,
    1.2236715869426616e-16, 1.2925953393526585e-16, 1.3653414360415615e-16, 1.4421180984655876e-16,
    1.523144666905964e-16, 1.6086521813782837e-16, 1.69888399218211e-16, 1.7940964015651013e-16,
    1.8945593380471497e-16, 2.0005570650250037e-16, 2.1123889253556437e-16, 2.2303701236989477e-16,
    2.3548325484854944e-16, 2.486125635465376e-16, 2.624617274887429e-16, 2.770694764456808e-16,
    2.924765810321598e-16, 3.08725957844658e-16, 3.258627798844748e-16, 3.4393459252557207e-16,
    3.6299143529822487e-16, 3.830859697725883e-16, 4.042736138397367e-16, 4.266126827018493e-16,
    4.501645368979337e-16, 4.749937377069958e-16, 5.011682102866223e-16, 5.287594149218679e-16,
    5.578425267769627e-16, 5.884966245608754e-16, 6.208048885369594e-16, 6.548548083271659e-16,
    6.907384009824376e-16, 7.285524398128166e-16, 7.683986944939627e-16, 8.103841829908103e-16,
    8.546214358643802e-16, 9.012287735538646e-16, 9.50330597253882e-16, 1.0020576940352343e-15,
    1.0565475568879057e-15, 1.1139447203959788e-15, 1.174401112787321e-15, 1.2380764251348746e-15,
    1.3051384985223578e-15, 1.3757637300243318e-15, 1.4501374983899065e-15, 1.5284546103598239e-15,
    1.6109197685894759e-15, 1.6977480621949128e-15, 1.7891654809848217e-15, 1.8854094544909083e-15,
    1.9867294169586915e-15, 2.093387399514239e-15, 2.2056586507775087e-15, 2.32383228725013e-15,
    2.4482119748661335e-15, 2.5791166431566437e-15, 2.7168812335449365e-15, 2.861857483356835e-15,
    3.0144147472028775e-15, 3.1749408574625876e-15, 3.343843025679767e-15, 3.5215487867577265e-15,
    3.708506987928943e-15, 3.905188824561382e-15, 4.112088924955249e-15, 4.329726486381556e-15,
    4.5586464647118495e-15, 4.7994208200949655e-15, 5.052649821244043e-15, 5.318963411011908e-15,
    5.5990226360501675e-15, 5.893521143471967e-15, 6.203186747566848e-15, 6.5287830697496445e-15,
    6.8711112550669375e-15, 7.23101176872911e-15, 7.609366276288726e-15, 8.007099611244989e-15,
    8.425181834018487e-15, 8.864630386413411e-15, 9.326512345863491e-15, 9.811946783945375e-15,
    1.0322107233837685e-14, 1.0858224271607867e-14, 1.142158821641932e-14, 1.2013551954973435e-14,
    1.2635533895729254e-14, 1.3289021058683844e-14, 1.3975572306745374e-14, 1.4696821724990417e-14,
    1.5454482154366893e-14, 1.6250348886687036e-14, 1.7086303528046387e-14, 1.7964318038110898e-14,
    1.8886458953032903e-14, 1.9854891800085072e-14, 2.0871885712449776e-14, 2.1939818252957353e-14,
    2.3061180455940554e-14, 2.4238582096762505e-14, 2.5474757198978933e-14, 2.6772569789515692e-14,
    2.813501991268416e-14, 2.9565249914309003e-14, 3.1066551007720976e-14, 3.264237013385712e-14,
    3.4296317128229873e-14, 3.603217220805719e-14, 3.7853893793400816e-14, 3.976562667674361e-14,
    4.177171055603275e-14, 4.3876688946847166e-14, 4.6085318489989446e-14, 4.8402578671493e-14,
    5.08336819727268e-14, 5.338408446901546e-14, 5.605949689596208e-14, 5.886589620343738e-14,
    6.180953761803682e-14, 6.48969672356488e-14, 6.813503516668475e-14, 7.153090925742e-14,
    7.509208941188506e-14, 7.882642253971887e-14, 8.274211815645335e-14, 8.684776466376742e-14,
    9.115234633836588e-14, 9.566526105931745e-14, 1.0039633880488065e-13, 1.0535586095111315e-13,
    1.1055458040586476e-13, 1.1600374261310485e-13, 1.2171510746395627e-13, 1.2770097215226003e-13,
    1.3397419501402483e-13, 1.405482203916878e-13, 1.4743710456575644e-13, 1.5465554279810103e-13,
    1.6221889753295297e-13, 1.7014322780346647e-13, 1.7844531989364001e-13, 1.871427193073606e-13,
    1.9625376409838272e-13, 2.0579761961720424e-13, 2.1579431473298709e-13, 2.2626477959101037e-13,
    2.3723088496848335e-13, 2.4871548329404704e-13, 2.6074245139887153e-13, 2.733367350698873e-13,
    2.8652439547848354e-13, 3.0033265756087257e-13, 3.1478996042927834e-13, 3.299260098962188e-13,
    3.457718331973371e-13, 3.623598360015819e-13, 3.7972386180094396e-13, 3.9789925377560277e-13,
    4.1692291923392815e-13, 4.3683339673078836e-13, 4.57670925971433e-13, 4.794775206124922e-13,
    5.022970440758197e-13, 5.261752884954323e-13, 5.511600569223307e-13, 5.773012489168312e-13,
    6.04650949662951e-13, 6.332635227444933e-13, 6.631957067279172e-13, 6.945067157023997e-13,
    7.272583439334042e-13, 7.615150747918596e-13, 7.973441941272324e-13, 8.348159082591332e-13,
    8.74003466768714e-13, 9.149832902778392e-13, 9.578351034111762e-13, 1.002642073143662e-12,
    1.0494909527433366e-12, 1.0984722315273912e-12, 1.1496802906575057e-12, 1.2032135652088654e-12,
    1.2591747127559907e-12, 1.3176707887276215e-12, 1.3788134287921835e-12, 1.442719038545057e-12,
    1.5095089907788976e-12, 1.5793098306286964e-12, 1.652253488893859e-12, 1.7284775038509938e-12,
    1.8081252518821699e-12, 1.8913461872558026e-12, 1.978296091409399e-12, 2.0691373320960023e-12,
    2.164039132769849e-12, 2.263177852599849e-12, 2.3667372775142293e-12, 2.4749089226937762e-12,
    2.587892346946405e-12, 2.7058954794118787e-12, 2.8291349590608513e-12, 2.957836487469964e-12,
    3.0922351953715955e-12, 3.23257602349475e-12, 3.3791141182325306e-12, 3.5321152426902968e-12,
    3.691856203688648e-12, 3.858625295315908e-12, 4.032722759645915e-12, 4.2144612652586075e-12,
    4.404166404224177e-12, 4.602177208233843e-12, 4.808846684585789e-12, 5.024542372758687e-12,
    5.249646922331825e-12, 5.484558693037241e-12, 5.7296923777567815e-12, 5.9854796493054064e-12,
    6.252369831872524e-12, 6.530830598021821e-12, 6.82134869218297e-12, 7.124430681600661e-12,
    7.440603735739718e-12, 7.770416435179498e-12, 8.114439611067824e-12, 8.4732672162402e-12,
    8.847517229148837e-12, 9.23783259178591e-12, 9.644882182825224e-12, 1.0069361827249382e-11,
    1.0511995343773129e-11, 1.0973535631416374e-11, 1.14547657966301e-11, 1.1956500322422693e-11,
    1.247958628098618e-11, 1.3024904591370314e-11, 1.3593371323808085e-11, 1.418593905234739e-11,
    1.4803598257500723e-11, 1.544737878068401e-11, 1.6118351332272264e-11, 1.6817629055163826e-11,
    1.754636914580698e-11, 1.8305774534709358e-11, 1.9097095628515595e-11, 1.9921632115812093e-11,
    2.0780734838885805e-11, 2.167580773374086e-11, 2.2608309840751838e-11, 2.3579757388410094e-11,
    2.4591725952705723e-11, 2.564585269476411e-11, 2.674383867944919e-11, 2.788745127773099e-11,
    2.9078526655707006e-11, 3.031897235326301e-11, 3.1610769955456796e-11, 3.295597785980426e-11,
    3.43567341427614e-11, 3.581525952878757e-11, 3.733386046550012e-11, 3.8914932308534615e-11,
    4.056096261984788e-11, 4.2274534583313467e-11, 4.405833054159355e-11, 4.591513565839242e-11,
    4.784784171032914e-11, 4.9859451012804526e-11, 5.19530804843777e-11, 5.4131965854308603e-11,
    5.6399466018076245e-11, 5.875906754582722e-11, 6.121438934887678e-11, 6.376918750953853e-11,
    6.642736027972622e-11, 6.919295325395326e-11, 7.207016472251182e-11, 7.506335121082185e-11,
    7.817703321110204e-11, 8.141590111272812e-11, 8.478482133782934e-11, 8.828884268888593e-11,
    9.193320291529427e-11, 9.572333550609033e-11, 9.96648767162413e-11, 1.0376367283414212e-10,
    1.0802578769819049e-10, 1.1245751047056475e-10, 1.1706536367656287e-10, 1.2185611151813484e-10,
    1.268367684704965e-10, 1.3201460817097484e-10, 1.373971726095397e-10, 1.4299228163073993e-10,
    1.4880804275707183e-10, 1.5485286134410127e-10, 1.61135451077985e-10, 1.6766484482635837e-10,
    1.7445040585386424e-10, 1.815018394139743e-10, 1.8882920472907421e-10, 1.9644292737115474e-10,
    2.043538120558209e-10, 2.1257305586270798e-10, 2.2111226189578618e-10, 2.299834533974276e-10,
    2.39199088330536e-10, 2.4877207444345706e-10, 2.5871578483280364e-10, 2.690440740198247e-10,
    2.7977129455633086e-10, 2.909123141767526e-10, 3.0248253351331055e-10, 3.144979043918281e-10,
    3.2697494872618884e-10, 3.3993077803002077e-10, 3.5338311356464647e-10, 3.6735030714299004e-10,
    3.8185136260961187e-10, 3.9690595801768536e-10, 4.125344685242972e-10, 4.2875799002609446e-10,
    4.4559836355790965e-10, 4.63078200477643e-10, 4.812209084613803e-10, 5.000507183333761e-10,
    5.195927117562278e-10, 5.39872849807339e-10, 5.609180024684159e-10, 5.827559790556283e-10,
    6.054155596186942e-10, 6.289265273380758e-10, 6.533197019502466e-10, 6.786269742317567e-10,
    7.048813415738467e-10, 7.321169446800743e-10, 7.603691054204371e-10, 7.896743658763793e-10,
    8.200705286119781e-10, 8.515966982076714e-10, 8.842933240937801e-10, 9.182022447222243e-10,
    9.533667331158106e-10, 9.898315438355525e-10, 1.0276429614076665e-9, 1.0668488502528893e-9,
    1.107498706162079e-9, 1.1496437093631778e-9, 1.1933367792257745e-9, 1.2386326306509564e-9,
    1.2855878321951603e-9, 1.3342608659783401e-9, 1.3847121894277981e-9, 1.437004298910779e-9,
    1.4912017953099547e-9, 1.547371451597737e-9, 1.6055822824665155e-9, 1.6659056160737868e-9,
    1.728415167962338e-9, 1.7931871172175614e-9, 1.860300184925407e-9, 1.9298357149962695e-9,
    2.001877757421753e-9, 2.076513154033056e-9, 2.1538316268315387e-9, 2.233925868963791e-9,
    2.3168916384154827e-9, 2.402827854500257e-9, 2.4918366972217143e-9, 2.584023709588805e-9,
    2.679497902966781e-9, 2.778371865548176e-9, 2.8807618740304125e-9, 2.9867880085886237e-9,
    3.096574271234872e-9, 3.21024870765726e-9, 3.3279435326343587e-9, 3.4497952591234613e-9,
    3.5759448311230745e-9, 3.7065377604130827e-9, 3.841724267278253e-9, 3.981659425323564e-9,
    4.126503310492701e-9, 4.276421154403613e-9, 4.4315835021179e-9, 4.5921663744639054e-9,
    4.758351435036259e-9, 4.930326161997483e-9, 5.108284024810666e-9, 5.292424666035361e-9,
    5.482954088321723e-9, 5.680084846741904e-9, 5.884036246600413e-9, 6.095034546869195e-9,
    6.3133131693962444e-9, 6.5391129140409064e-9, 6.7726821798914685e-9, 7.0142771927259026e-9,
    7.264162238879627e-9, 7.522609905688032e-9, 7.789901328675977e-9, 8.066326445670573e-9,
    8.352184258016992e-9, 8.647783099082744e-9, 8.953440910238948e-9, 9.269485524512109e-9,
    9.596254958104692e-9, 9.93409770998721e-9, 1.0283373069769397e-8, 1.0644451434062688e-8,
    1.1017714631551358e-8, 1.1403556256995495e-8, 1.1802382014392138e-8, 1.2214610069528725e-8,
    1.2640671412166634e-8, 1.308101022809829e-8, 1.35360842813282e-8, 1.400636530663216e-8,
    1.4492339412756107e-8, 1.4994507496521765e-8, 1.5513385668111413e-8, 1.6049505687812332e-8,
    1.6603415414504734e-8, 1.7175679266187378e-8, 1.7766878692837604e-8, 1.837761266191217e-8,
    1.900849815680141e-8, 1.9660170688554664e-8, 2.0333284821204298e-8, 2.1028514711022375e-8,
    2.1746554660048746e-8, 2.2488119684242374e-8, 2.325394609660858e-8, 2.4044792105669356e-8,
    2.486143842964643e-8, 2.5704688926738887e-8, 2.657537124188309e-8, 2.747433747039072e-8,
    2.8402464838873933e-8, 2.936065640386674e-8, 3.03498417685716e-8, 3.137097781815796e-8,
    3.242504947405887e-8, 3.3513070467714116e-8, 3.4636084134221496e-8, 3.5795164226366005e-8,
    3.699141574950837e-8, 3.822597581782294e-8, 3.9500014532384276e-8, 4.081473588161836e-8,
    4.21713786646343e-8, 4.357121743797517e-8, 4.5015563486328844e-8, 4.6505765817755274e-8,
    4.8043212183997086e-8, 4.9629330126452027e-8, 5.1265588048398396e-8, 5.295349631407465e-8,
    5.469460837522989e-8, 5.649052192577095e-8, 5.834288008514726e-8, 6.025337261112877e-8,
    6.22237371426379e-8, 6.425576047332089e-8, 6.635127985654841e-8, 6.851218434255584e-8,
    7.074041614844114e-8, 7.303797206175877e-8, 7.540690487845783e-8, 7.784932487593336e-8,
    8.036740132196579e-8, 8.296336402034807e-8, 8.563950489401001e-8, 8.83981796064683e-8,
    9.124180922244084e-8, 9.417288190849162e-8, 9.719395467457584e-8, 1.0030765515738003e-7,
    1.0351668344637096e-7, 1.0682381395347218e-7, 1.1023189732732256e-7, 1.1374386241307164e-7,
    1.1736271825870038e-7, 1.2109155616885947e-7, 1.249335518072503e-7, 1.2889196734857957e-7,
    1.329701536811517e-7, 1.3717155266117012e-7, 1.4149969941984282e-7, 1.459582247244166e-7,
    1.5055085739426895e-7, 1.5528142677321933e-7, 1.6015386525923857e-7, 1.6517221089276038e-7,
    1.703406100048114e-7, 1.7566331992620784e-7, 1.8114471175908756e-7, 1.8678927321206563e-7,
    1.9260161150032392e-7, 1.9858645631197625e-7, 2.0474866284206475e-7, 2.1109321489557421e-7,
    2.176252280608707e-7, 2.243499529550017e-7, 2.3127277854230882e-7, 2.383992355278469e-7,
    2.457349998271092e-7, 2.532858961136011e-7, 2.610579014458227e-7, 2.690571489752467e-7,
    2.772899317369064e-7, 2.8576270652425025e-7, 2.9448209784991525e-7, 3.034549019941324e-7,
    3.126880911424871e-7, 3.221888176147953e-7, 3.319644181868796e-7, 3.4202241850705713e-7,
    3.5237053760919813e-7, 3.630166925242199e-7, 3.739690029919287e-7, 3.852357962751506e-7,
    3.9682561207811534e-7, 4.08747207571105e-7, 4.210095625233922e-7, 4.3362188454654583e-7,
    4.4659361445018945e-7, 4.5993443171237593e-7, 4.7365426006669755e-7, 4.877632732084004e-7,
    5.022719006216674e-7, 5.171908335304007e-7, 5.325310309747816e-7, 5.483037260159575e-7,
    5.645204320712334e-7, 5.811929493821955e-7, 5.98333371618203e-7, 6.159540926177486e-7,
    6.340678132702223e-7, 6.526875485406298e-7, 6.718266346398858e-7, 6.914987363433132e-7,
    7.117178544600525e-7, 7.324983334560708e-7, 7.538548692335804e-7, 7.758025170696216e-7,
    7.983566997167005e-7, 8.215332156683425e-7, 8.45348247592487e-7, 8.69818370935713e-7,
    8.949605627013036e-7, 9.20792210404184e-7, 9.473311212058754e-7, 9.745955312325596e-7,
    1.002604115079485e-6, 1.0313759955049193e-6, 1.0609307533169349e-6, 1.0912884374563567e-6,
    1.122469575279213e-6, 1.1544951830421504e-6, 1.1873867765942372e-6, 1.2211663822786574e-6,
    1.2558565480478957e-6, 1.291480354795947e-6, 1.328061427911293e-6, 1.3656239490542286e-6,
    1.4041926681623986e-6, 1.4437929156882654e-6, 1.4844506150723883e-6, 1.526192295456381e-6,
    1.5690451046395449e-6, 1.6130368222831163e-6, 1.6581958733661825e-6, 1.7045513418974356e-6,
    1.7521329848867979e-6, 1.8009712465812275e-6, 1.8510972729688647e-6, 1.9025429265558934e-6,
    1.955340801420471e-6, 2.0095242385480735e-6, 2.0651273414527907e-6, 2.122184992089053e-6,
    2.1807328670583767e-6, 2.240807454115749e-6, 2.302446068980304e-6, 2.365686872455111e-6,
    2.4305688878607133e-6, 2.4971320187874565e-6, 2.5654170671712982e-6, 2.6354657516982706e-6,
    2.7073207265423805e-6, 2.7810256004422192e-6, 2.8566249561212864e-6, 2.9341643700572064e-6,
    3.0136904326051556e-6, 3.0952507684807305e-6, 3.1788940576076056e-6, 3.2646700563353955e-6,
    3.3526296190332247e-6, 3.4428247200644916e-6, 3.5353084761483948e-6, 3.630135169113891e-6,
    3.727360269051766e-6, 3.827040457870557e-6, 3.929233653262191e-6, 4.0339990330831185e-6,
    4.141397060156997e-6, 4.251489507504716e-6, 4.3643394840080845e-6, 4.480011460512963e-6,
    4.598571296378274e-6, 4.720086266477003e-6, 4.844625088655356e-6, 4.972257951656621e-6,
    5.103056543515994e-6, 5.237094080432778e-6, 5.374445336126617e-6, 5.515186671684253e-6,
    5.659396065903326e-6, 5.807153146140052e-6, 5.958539219667549e-6, 6.113637305551372e-6,
    6.272532167049336e-6, 6.4353103445425046e-6, 6.60206018900419e-6, 6.772871896014147e-6,
    6.947837540324894e-6, 7.127051110987381e-6, 7.310608547043325e-6, 7.498607773790994e-6,
    7.691148739632566e-6, 7.888333453509328e-6, 8.090266022933254e-6, 8.297052692621602e-6,
    8.50880188374243e-6, 8.725624233778517e-6, 8.947632637017231e-6, 9.174942285674415e-6,
    9.40767071165922e-6, 9.645937828988684e-6, 9.889865976858933e-6, 1.0139579963381648e-5,
    1.039520710999327e-5, 1.0656877296544876e-5, 1.0924723007081412e-5, 1.119887937631735e-5,
    1.1479484236817953e-5, 1.176667816689326e-5, 1.2060604539214029e-5, 1.236140957015711e-5,
    1.266924236988904e-5, 1.2984254993195961e-5, 1.3306602491068323e-5, 1.3636442963048867e-5,
    1.3973937610352179e-5, 1.431925078976473e-5, 1.467255006833347e-5, 1.5034006278851725e-5,
    1.54037935761514e-5, 1.5782089494209612e-5, 1.616907500407867e-5, 1.6564934572648328e-5,
    1.6969856222248904e-5, 1.7384031591103897e-5, 1.7807655994641245e-5, 1.8240928487672033e-5,
    1.8684051927445412e-5, 1.913723303758852e-5, 1.960068247294089e-5, 2.0074614885291675e-5,
    2.0559248990029154e-5, 2.1054807633711138e-5, 2.156151786256584e-5, 2.2079610991931565e-5,
    2.2609322676645034e-5, 2.3150892982386905e-5, 2.3704566457993764e-5, 2.4270592208745794e-5,
    2.4849223970639078e-5, 2.5440720185651743e-5, 2.6045344078013313e-5, 2.666336373148604e-5,
    2.7295052167667713e-5, 2.7940687425324794e-5, 2.8600552640765416e-5, 2.927493612926109e-5,
    2.9964131467526525e-5, 3.066843757726655e-5, 3.138815880979926e-5, 3.212360503176508e-5,
    3.287509171192985e-5, 3.364294000909198e-5, 3.442747686110258e-5, 3.522903507500744e-5,
    3.604795341831972e-5, 3.6884576711433696e-5, 3.773925592118673e-5, 3.861234825557968e-5,
    3.950421725966503e-5, 4.041523291261053e-5, 4.134577172594803e-5, 4.2296216843016534e-5,
    4.3266958139608346e-5, 4.4258392325826274e-5, 4.527092304916157e-5, 4.630496099880159e-5,
    4.7360924011174826e-5, 4.84392371767425e-5, 4.95403329480461e-5, 5.066465124901801e-5,
    5.181263958556434e-5, 5.298475315742935e-5, 5.418145497134798e-5, 5.54032159554963e-5,
    5.6650515075248e-5, 5.792383945024376e-5, 5.9223684472783816e-5, 6.0550553927549596e-5,
    6.190496011266405e-5, 6.328742396209757e-5, 6.469847516942747e-5, 6.61386523129594e-5,
    6.760850298221783e-5, 6.910858390581205e-5, 7.063946108068788e-5, 7.22017099027697e-5,
    7.379591529900141e-5, 7.542267186079314e-5, 7.708258397888182e-5, 7.87762659796091e-5,
    8.050434226262918e-5, 8.226744744004705e-5, 8.406622647699847e-5, 8.590133483367546e-5,
    8.777343860880485e-5, 8.968321468458565e-5, 9.163135087309131e-5, 9.361854606414335e-5,
    9.5645510374661e-5, 9.771296529949396e-5, 9.98216438637419e-5, 0.00010197229077656971,
    0.00010416566258651836, 0.00010640252783832062, 0.00010868366723122573, 0.00011100987377883606,
    0.00011338195297046199, 0.00011580072293400022, 0.00011826701460033533, 0.00012078167186927508,
    0.00012334555177701795, 0.00012595952466515893, 0.0001286244743512373, 0.0001313412983008284,
    0.00013411090780118386, 0.00013693422813642144, 0.00013981219876427057, 0.00014274577349436996,
    0.000145735920668128, 0.00014878362334013972, 0.00015188987946116708, 0.00015505570206268357,
    0.0001582821194429831, 0.0001615701753548556, 0.0001649209291948292, 0.00016833545619398114,
    0.00017181484761031706, 0.0001753602109227165, 0.00017897267002645205, 0.0001826533654302706,
    0.00018640345445504632, 0.00019022411143399985, 0.00019411652791448292, 0.00019808191286132678,
    0.00020212149286175435, 0.0002062365123318535, 0.0002104282337246084, 0.00021469793773948816,
    0.0002190469235335882, 0.00022347650893432273, 0.0002279880306536654, 0.0002325828445039319,
    0.00023726232561510247, 0.00024202786865368318, 0.0002468808880430934, 0.0002518228181855825,
    0.0002568551136856682, 0.00026197924957508675, 0.000267196721539258, 0.00027250904614525053,
    0.000277917761071243, 0.00028342442533747976, 0.00028903061953870887, 0.00029473794607809113,
    0.000300548029402583, 0.00030646251623977496, 0.0003124830758361868, 0.0003186114001969964,
    0.00032484920432721074, 0.00033119822647425384, 0.0003376602283719737, 0.00034423699548604705,
    0.00035093033726077877, 0.00035774208736728634, 0.0003646741039530492, 0.0003717282698928156,
    0.0003789064930408626, 0.00038621070648458313, 0.00039364286879939287, 0.0004012049643049479,
    0.0004088990033226538, 0.00041672702243445033, 0.00042469108474286804, 0.00043279328013232635,
    0.0004410357255316691, 0.00044942056517791696, 0.00045794997088122603, 0.0004666261422910223,
    0.0004754513071633136, 0.00048442772162914587, 0.000493557670464195, 0.0005028434673594733,
    0.0005122874551931292, 0.0005218920063033209, 0.0005316595227621567, 0.0005415924366506591,
    0.0005516932103347544, 0.0005619643367422514, 0.0005724083396407958, 0.0005830277739167796,
    0.0005938252258551734, 0.00060480331342027, 0.0006159646865373121, 0.0006273120273749739,
    0.0006388480506286874, 0.0006505755038047745, 0.0006624971675053608, 0.0006746158557140612,
    0.0006869344160823941, 0.0006994557302169012, 0.0007121827139669551, 0.0007251183177132165,
    0.0007382655266567213, 0.0007516273611085625, 0.0007652068767801465, 0.0007790071650739855,
    0.0007930313533750027, 0.000807282605342319, 0.0008217641212014887, 0.0008364791380371521,
    0.0008514309300860855, 0.0008666228090305893, 0.0008820581242922244, 0.0008977402633258129,
    0.0009136726519137176, 0.0009298587544603262, 0.0009463020742867421, 0.0009630061539256198,
    0.0009799745754161195, 0.00099721096059895, 0.0010147189714114543, 0.0010325023101827098,
    0.0010505647199285952, 0.0010689099846468086, 0.001087541929611771, 0.0011064644216693888,
    0.001125681369531652, 0.0011451967240709885, 0.0011650144786143955, 0.0011851386692372425,
    0.0012055733750567462, 0.0012263227185250693, 0.0012473908657219962, 0.0012687820266471383,
    0.0012905004555116464, 0.001312550451029351, 0.001334936356707347, 0.00135766256113591,
    0.0013807334982777412, 0.0014041536477564975, 0.0014279275351445474, 0.0014520597322499015,
    0.0014765548574022993, 0.0015014175757383783, 0.0015266525994858835, 0.0015522646882469005,
    0.001578258649280007, 0.0016046393377813603, 0.001631411657164616, 0.0016585805593396664,
    0.0016861510449901313, 0.001714128163849569, 0.0017425170149763256, 0.001771322747027017,
    0.001800550558528544, 0.0018302056981486347, 0.0018602934649648414, 0.001890819208731925,
    0.0019217883301476126, 0.001953206281116643, 0.001985078565013065, 0.00201741073694073,
    0.0020502084039919198, 0.002083477225504081, 0.002117222913314568, 0.002151451232013385,
    0.0021861679991938545, 0.002221379085701128, 0.002257090415878565, 0.002293307967811815,
    0.0023300377735706555, 0.00236728591944843, 0.0024050585461991266, 0.0024433618492719564,
    0.0024822020790434287, 0.0025215855410468595, 0.0025615185961992233, 0.0026020076610253134,
    0.0026430592078791884, 0.0026846797651627723, 0.0027268759175416136, 0.002769654306157714,
    0.002813021628839371, 0.0028569846403080066, 0.0029015501523818577, 0.002946725034176558,
    0.002992516212302451, 0.003038930671058684, 0.003085975452623928, 0.00313365765724373,
    0.003181984443414392, 0.0032309630280633545, 0.0032806006867260084, 0.0033309047537188716,
    0.0033818826223090685, 0.003433541744880081, 0.003485889633093651, 0.0035389338580478786,
    0.0035926820504313017, 0.0036471419006730756, 0.0037023211590890364, 0.003758227636023687,
    0.003814869201988013, 0.003872253787793063, 0.003930389384679225, 0.003989284044441187,
    0.004048945879548462, 0.004109383063261459, 0.004170603829743013, 0.004232616474165334,
    0.004295429352812324, 0.00435905088317715, 0.004423489544055098, 0.004488753875631552,
    0.004554852479565134, 0.004621794019065875, 0.004689587218968397, 0.004758240865800023,
    0.004827763807843783, 0.004898164955196224, 0.004969453279820017, 0.005041637815591234,
    0.0051147276583412915, 0.005188731965893526, 0.005263659958094222, 0.005339520916838203,
    0.005416324186088802, 0.005494079171892185, 0.005572795342386054, 0.005652482227802523,
    0.005733149420465234, 0.005814806574780651, 0.005897463407223375, 0.0059811296963155495,
    0.0060658152826002214, 0.006151530068608657, 0.006238284018821516, 0.00632608715962386,
    0.006414949579253919, 0.006504881427745599, 0.0065958929168646405, 0.006687994320038419,
    0.006781195972279293, 0.006875508270101464, 0.006970941671431338, 0.007067506695511277,
    0.007165213922796749, 0.007264073994846779, 0.007364097614207689, 0.007465295544290073,
    0.0075676786092389306, 0.007671257693796988, 0.007776043743161069, 0.007882047762831555,
    0.007989280818454795, 0.008097754035658548, 0.008207478599880282, 0.008318465756188415,
    0.008430726809096336, 0.008544273122369281, 0.00865911611882391, 0.008775267280120623,
    0.008892738146548602, 0.009011540316803457, 0.009131685447757448, 0.009253185254222336,
    0.009376051508704759, 0.009500296041154063, 0.00962593073870266, 0.009752967545398802,
    0.009881418461931742, 0.010011295545349254, 0.010142610908767549, 0.010275376721073462,
    0.01040960520661892, 0.010545308644907663, 0.010682499370274238, 0.01082118977155516,
    0.010961392291752187, 0.011103119427687906, 0.011246383729653283, 0.011391197801047406,
    0.011537574298009334, 0.01168552592904191, 0.011835065454627727, 0.011986205686837061,
    0.01213895948892785, 0.012293339774937595, 0.012449359509267328, 0.012607031706257455,
    0.012766369429755637, 0.012927385792676532, 0.01309009395655348, 0.013254507131082144,
    0.01342063857365597, 0.013588501588893609, 0.013758109528158221, 0.013929475789068658,
    0.01410261381500246, 0.014277537094590866, 0.014454259161205485, 0.014632793592437052,
    0.014813154009565916, 0.014995354077024414, 0.015179407501851143, 0.01536532803313709,
    0.0155531294614636, 0.015742825618332346, 0.01593443037558699, 0.01612795764482689,
    0.01632342137681262, 0.016520835560863527, 0.016720214224246986, 0.01692157143155985,
    0.017124921284101605, 0.017330277919239658, 0.017537655509766527, 0.01774706826324902,
    0.017958530421369415, 0.01817205625925872, 0.01838766008482197, 0.018605356238055468,
    0.018825159090356338, 0.019047083043824006, 0.019271142530553943, 0.019497352011923496,
    0.019725725977869958, 0.019956278946160824, 0.02018902546165637, 0.020423980095564447,
    0.020661157444687626, 0.020900572130662712, 0.02114223879919256, 0.02138617211927044,
    0.021632386782396762, 0.021880897501788336, 0.0221317190115802, 0.022384866066019964,
    0.0226403534386548, 0.022898195921511176, 0.023158408324267177, 0.023421005473417626,
    0.023686002211432085, 0.023953413395905617, 0.024223253898702484, 0.024495538605092803,
    0.02477028241288218, 0.025047500231534483, 0.02532720698128763, 0.025609417592262623,
    0.02589414700356579, 0.026181410162384254, 0.026471222023074902, 0.026763597546246527,
    0.02705855169783575, 0.027356099448176123, 0.027656255771061154, 0.02795903564280079,
    0.028264454041271644, 0.02857252594496121, 0.02888326633200568, 0.02919669017922185,
    0.0295128124611331, 0.029831648148989264, 0.030153212209780834, 0.030477519605247312,
    0.030804585290879868, 0.031134424214918462, 0.03146705131734333, 0.03180248152886108,
    0.03214072976988539, 0.03248181094951245, 0.03282573996449108, 0.03317253169818796,
    0.033522201019547504, 0.03387476278204711, 0.0342302318226473, 0.03458862296073707,
    0.03494995099707491, 0.03531423071272471, 0.035681476867987526, 0.03605170420132891,
    0.03642492742830165, 0.036801161240464675, 0.03718042030429744, 0.03756271926011071,
    0.03794807272095288, 0.03833649527151301, 0.03872800146701974, 0.039122605832136684,
    0.03952032285985439, 0.039921167010378684, 0.04032515271001582, 0.04073229435005436,
    0.04114260628564404, 0.04155610283467135, 0.04197279827663248, 0.04239270685150337,
    0.04281584275860705, 0.04324222015547839, 0.04367185315672649, 0.044104755832894485,
    0.04454094220931733, 0.04498042626497734, 0.04542322193135772, 0.04586934309129409,
    0.04631880357782441, 0.04677161717303715, 0.04722779760691766, 0.04768735855619353,
    0.048150313643178184, 0.048616676434613613, 0.04908646044051162, 0.04955967911299462,
    0.050036345845134965, 0.05051647396979402, 0.05100007675846052, 0.051487167420088,
    0.051977759099932644, 0.05247186487839004, 0.05296949776983255, 0.05347067072144595,
    0.05397539661206685, 0.05448368825101991, 0.054995558376955606, 0.055511019656688476,
    0.056030084684035794, 0.056552765978657264, 0.057079075984895485, 0.05760902707061726,
    0.058142631526056095, 0.05867990156265609, 0.05922084931191704, 0.05976548682424107,
    0.06031382606778078, 0.060865878927289487, 0.0614216572029728, 0.06198117260934294,
    0.06254443677407437, 0.06311146123686225, 0.06368225744828326, 0.06425683676865857,
    0.06483521046691977, 0.06541738971947758, 0.06600338560909329, 0.0665932091237534,
    0.0671868711555473, 0.06778438249954834, 0.06838575385269817, 0.06899099581269481,
    0.06960011887688436, 0.07021313344115634, 0.07083004979884325, 0.07145087813962382,
    0.07207562854843082, 0.07270431100436302, 0.07333693537960151, 0.07397351143833071,
    0.07461404883566415, 0.07525855711657477, 0.0759070457148305, 0.07655952395193484,
    0.07721600103607248, 0.07787648606106032, 0.07854098800530425, 0.07920951573076088,
    0.0798820779819055, 0.08055868338470573, 0.08123934044560122, 0.08192405755048894,
    0.0826128429637153, 0.08330570482707414, 0.08400265115881152, 0.0847036898526368,
    0.08540882867674034, 0.08611807527281837, 0.08683143715510436, 0.08754892170940776,
    0.08827053619215978, 0.08899628772946629, 0.08972618331616827, 0.09046022981491003,
    0.0911984339552144, 0.09194080233256627, 0.09268734140750362, 0.09343805750471684,
    0.0941929568121558, 0.09495204538014514, 0.09571532912050831, 0.09648281380569942,
    0.09725450506794396, 0.09803040839838803, 0.09881052914625649, 0.09959487251801973,
    0.10038344357656956, 0.1011762472404038, 0.1019732882828208, 0.10277457133112225,
    0.10358010086582618, 0.10438988121988908, 0.10520391657793733, 0.10602221097550889,
    0.10684476829830417, 0.10767159228144726, 0.10850268650875668, 0.10933805441202671,
    0.11017769927031809, 0.1110216242092599, 0.11186983220036087, 0.11272232606033195,
    0.11357910845041859, 0.11444018187574438, 0.11530554868466457, 0.11617521106813139,
    0.11704917105906916, 0.11792743053176102, 0.11880999120124644, 0.11969685462272991,
    0.12058802219100093, 0.1214834951398649, 0.12238327454158555, 0.12328736130633929,
    0.12419575618167994, 0.12510845975201615, 0.12602547243809972, 0.12694679449652593,
    0.12787242601924578, 0.1288023669330896, 0.12973661699930314, 0.13067517581309515,
    0.13161804280319747, 0.13256521723143663, 0.13351669819231826, 0.13447248461262354,
    0.1354325752510173, 0.1363969686976694, 0.13736566337388803, 0.13833865753176547,
    0.13931594925383645, 0.14029753645274878, 0.14128341687094723, 0.14227358808036936,
    0.14326804748215433, 0.14426679230636452, 0.14526981961172017, 0.14627712628534606,
    0.1472887090425318, 0.14830456442650483, 0.14932468880821625, 0.15034907838613987,
    0.15137772918608364, 0.15241063706101532, 0.1534477976909, 0.1544892065825514,
    0.15553485906949605, 0.15658475031185104, 0.15763887529621437, 0.15869722883556897,
    0.1597598055691999, 0.16082659996262433, 0.16189760630753572, 0.16297281872176023,
    0.16405223114922757, 0.16513583735995388, 0.16622363095003914, 0.16731560534167747,
    0.16841175378318043, 0.16951206934901422, 0.17061654493985004, 0.1717251732826278,
    0.17283794693063326, 0.17395485826358859, 0.1750758994877563, 0.1762010626360563,
    0.17733033956819697, 0.17846372197081872, 0.17960120135765187, 0.18074276906968706,
    0.1818884162753596, 0.18303813397074697, 0.1841919129797792, 0.1853497439544637,
    0.186511617375122, 0.18767752355064082, 0.18884745261873598, 0.19002139454622952,
    0.19119933912934028, 0.19238127599398724, 0.19356719459610683, 0.19475708422198235,
    0.1959509339885874, 0.19714873284394188, 0.19835046956748123, 0.19955613277043893,
    0.2007657108962413, 0.20197919222091615, 0.20319656485351367, 0.20441781673654066,
    0.20564293564640707, 0.2068719091938861, 0.2081047248245862, 0.20934136981943646,
    0.2105818312951845, 0.21182609620490672, 0.21307415133853144, 0.2143259833233745,
    0.21558157862468685, 0.21684092354621592, 0.21810400423077744, 0.21937080666084127,
    0.22064131665912826, 0.22191551988922023, 0.2231934018561816, 0.224474947907193,
    0.2257601432321972, 0.22704897286455716, 0.2283414216817251, 0.22963747440592455,
    0.23093711560484312, 0.23224032969233788, 0.2335471009291514, 0.23485741342364017,
    0.2361712511325139, 0.23748859786158677, 0.23880943726653944, 0.2401337528536927,
    0.24146152798079198, 0.24279274585780336, 0.2441273895477202, 0.24546544196738082,
    0.24680688588829716, 0.24815170393749414, 0.24949987859835943, 0.2508513922115045,
    0.2522062269756353, 0.25356436494843393, 0.2549257880474507, 0.2562904780510059,
    0.2576584165991024, 0.25902958519434766, 0.26040396520288633, 0.2617815378553422,
    0.2631622842477702, 0.26454618534261803, 0.2659332219696975, 0.2673233748271651,
    0.26871662448251216, 0.2701129513735641, 0.2715123358094894, 0.2729147579718168,
    0.2743201979154622, 0.2757286355697643, 0.2771400507395287, 0.2785544231060811,
    0.2799717322283288, 0.28139195754383073, 0.2828150783698759, 0.28424107390457015,
    0.28566992322793067, 0.28710160530298906, 0.2885360989769022, 0.2899733829820703,
    0.291413435937264, 0.2928562363487574, 0.29430176261146995, 0.29574999301011506,
    0.2972009057203558, 0.2986544788099683, 0.30011069024001186, 0.30156951786600567,
    0.3030309394391129, 0.3044949326073313, 0.3059614749166899, 0.30743054381245283,
    0.3089021166403288, 0.31037617064768763, 0.31185268298478164, 0.31333163070597453,
    0.3148129907709745, 0.3162967400460745, 0.31778285530539724, 0.31927131323214575,
    0.32076209041986, 0.3222551633736774, 0.32375050851160014, 0.3252481021657663,
    0.3267479205837257, 0.3282499399297217, 0.32975413628597666, 0.33126048565398203,
    0.33276896395579314, 0.33427954703532786, 0.33579221065966997, 0.3373069305203754,
    0.33882368223478443, 0.3403424413473347, 0.3418631833308813, 0.34338588358801686,
    0.3449105174523983, 0.34643706019007425, 0.3479654870008172, 0.3494957730194579,
    0.351027893317223, 0.35256182290307564, 0.35409753672505756, 0.35563500967163586,
    0.3571742165730496, 0.3587151322026607, 0.36025773127830596, 0.3618019884636516,
    0.36334787836954907, 0.36489537555539364, 0.3664444545304835, 0.36799508975538087,
    0.36954725564327523, 0.37110092656134647, 0.3726560768321304, 0.37421268073488456,
    0.37577071250695493, 0.37733014634514433, 0.37889095640708037, 0.3804531168125843,
    0.38201660164504087, 0.3835813849527676, 0.3851474407503848, 0.38671474302018577,
    0.3882832657135062, 0.38985298275209396, 0.3914238680294791, 0.3929958954123419,
    0.3945690387418822, 0.3961432718351864, 0.39771856848659515, 0.3992949024690692,
    0.40087224753555445, 0.4024505774203461, 0.4040298658404514, 0.4056100864969509,
    0.40719121307635875, 0.40877321925198074, 0.4103560786852709, 0.4119397650271869,
    0.4135242519195422, 0.4151095129963577, 0.41669552188520986, 0.4182822522085778,
    0.41986967758518673, 0.4214577716313503, 0.42304650796230897, 0.4246358601935669,
    0.4262258019422252, 0.42781630682831284, 0.42940734847611384, 0.4309989005154922,
    0.432590936583213, 0.43418343032426027, 0.4357763553931515, 0.43736968545524874,
    0.43896339418806546, 0.44055745528257084, 0.4421518424444887, 0.443746529395594,
    0.445341489875004, 0.446936697640466, 0.4485321264696408, 0.45012775016138146,
    0.4517235425370082, 0.45331947744157813, 0.4549155287451505, 0.45651167034404805,
    0.45810787616211207, 0.4597041201519537, 0.46130037629620024, 0.46289661860873543,
    0.4644928211359355, 0.46608895795789956, 0.4676850031896745, 0.46928093098247503,
    0.47087671552489735, 0.4724723310441279, 0.4740677518071461, 0.4756629521219216,
    0.4772579063386049, 0.4788525888507132, 0.4804469740963092, 0.48204103655917474,
    0.4836347507699767, 0.48522809130742867, 0.48682103279944494, 0.4884135499242883,
    0.4900056174117116, 0.49159721004409257, 0.493188302657562, 0.49477887014312566,
    0.49636888744777835, 0.4979583295756123, 0.4995471715889183, 0.5011353886092794,
    0.502722955818658, 0.5043098484604757, 0.5058960418406857, 0.507481511328839,
    0.5090662323591414, 0.5106501804315055, 0.5122333311125926, 0.5138156600368502,
    0.5153971429075386, 0.5169777554977527, 0.5185574736514347, 0.5201362732843791,
    0.5217141303852307, 0.5232910210164738, 0.5248669213154145, 0.5264418074951539,
    0.5280156558455547, 0.5295884427341985, 0.531160144607336, 0.5327307379908283,
    0.5343001994910801, 0.5358685057959659, 0.5374356336757459, 0.5390015599839753,
    0.540566261658404, 0.5421297157218697, 0.5436918992831797, 0.5452527895379871,
    0.5468123637696567, 0.5483705993501236, 0.5499274737407412, 0.5514829644931237,
    0.5530370492499767, 0.5545897057459209, 0.5561409118083073, 0.5576906453580223,
    0.5592388844102855, 0.5607856070754372, 0.562330791559719, 0.5638744161660428,
    0.5654164592947538, 0.5669568994443829, 0.5684957152123896, 0.5700328852958985,
    0.5715683884924234, 0.5731022037005857, 0.5746343099208209, 0.576164686256078,
    0.577693311912509, 0.5792201662001499, 0.5807452285335912, 0.5822684784326412,
    0.583789895522979, 0.5853094595367981, 0.5868271503134419, 0.588342947800029,
    0.5898568320520703, 0.5913687832340758, 0.592878781620153, 0.5943868075945956,
    0.5958928416524641, 0.5973968644001553, 0.5988988565559641, 0.6003987989506353,
    0.601896672527907, 0.6033924583450437, 0.6048861375733603, 0.6063776914987384,
    0.6078671015221312, 0.6093543491600601, 0.6108394160451032, 0.6123222839263719,
    0.6138029346699813, 0.6152813502595094, 0.6167575127964472, 0.6182314045006407,
    0.619703007710723, 0.6211723048845363, 0.622639278599547, 0.6241039115532494,
    0.6255661865635611, 0.6270260865692097, 0.6284835946301097, 0.6299386939277307,
    0.631391367765456, 0.6328415995689325, 0.6342893728864114, 0.63573467138908,
    0.6371774788713843, 0.6386177792513424, 0.6400555565708492, 0.6414907949959722,
    0.6429234788172373, 0.644353592449908, 0.6457811204342523, 0.6472060474358041,
    0.6486283582456133, 0.650048037780488, 0.6514650710832283, 0.65287944332285,
    0.6542911397948008, 0.6557001459211674, 0.6571064472508731, 0.6585100294598678,
    0.6599108783513087, 0.6613089798557324, 0.6627043200312189, 0.6640968850635461,
    0.6654866612663365, 0.6668736350811955, 0.6682577930778398, 0.6696391219542203,
    0.6710176085366326, 0.6723932397798229, 0.6737660027670829, 0.6751358847103377,
    0.6765028729502253, 0.6778669549561674, 0.6792281183264324, 0.6805863507881899,
    0.6819416401975577, 0.6832939745396397, 0.6846433419285569, 0.6859897306074699,
    0.6873331289485928, 0.6886735254532, 0.6900109087516255, 0.6913452676032524,
    0.6926765908964977, 0.6940048676487859, 0.6953300870065175, 0.6966522382450291,
    0.6979713107685448, 0.6992872941101218, 0.7006001779315869, 0.7019099520234667,
    0.7032166063049096, 0.7045201308236004, 0.7058205157556685, 0.7071177514055873,
    0.7084118282060677, 0.7097027367179438, 0.7109904676300509, 0.7122750117590978,
    0.7135563600495307, 0.7148345035733907, 0.7161094335301643, 0.7173811412466271,
    0.7186496181766799, 0.7199148559011794, 0.7211768461277605, 0.7224355806906531,
    0.723691051550492, 0.7249432507941198, 0.7261921706343836, 0.7274378034099248,
    0.7286801415849632, 0.7299191777490738, 0.7311549046169583, 0.7323873150282091,
    0.7336164019470681, 0.7348421584621787, 0.7360645777863322, 0.7372836532562074,
    0.7384993783321048, 0.7397117465976748, 0.7409207517596397, 0.7421263876475098,
    0.7433286482132944, 0.744527527531206, 0.7457230197973597, 0.7469151193294665,
    0.7481038205665214, 0.7492891180684853, 0.7504710065159624, 0.7516494807098714,
    0.7528245355711116, 0.7539961661402239, 0.7551643675770463, 0.7563291351603645,
    0.7574904642875572, 0.7586483504742358, 0.7598027893538806, 0.7609537766774703,
    0.7621013083131077, 0.7632453802456405, 0.7643859885762765, 0.7655231295221953,
    0.7666567994161542, 0.76778699470609, 0.7689137119547171, 0.770036947839119,
    0.7711566991503371, 0.7722729627929554, 0.773385735784679, 0.7744950152559099,
    0.7756007984493182, 0.7767030827194091, 0.7778018655320862, 0.7788971444642092,
    0.7799889172031502, 0.7810771815463438, 0.7821619354008345, 0.78324317678282,
    0.7843209038171909, 0.7853951147370665, 0.7864658078833267, 0.7875329817041414,
    0.788596634754495, 0.7896567656957085, 0.7907133732949576, 0.7917664564247874,
    0.7928160140626247, 0.7938620452902859, 0.7949045492934822, 0.7959435253613222,
    0.7969789728858102, 0.7980108913613427, 0.7990392803842017, 0.8000641396520441,
    0.8010854689633897, 0.8021032682171055, 0.8031175374118874, 0.8041282766457394,
    0.8051354861154499, 0.8061391661160663, 0.8071393170403652, 0.8081359393783228,
    0.80912903371658, 0.8101186007379074, 0.8111046412206674, 0.8120871560382728,
    0.8130661461586454, 0.8140416126436704, 0.8150135566486504, 0.8159819794217557,
    0.8169468823034741, 0.8179082667260584, 0.8188661342129708, 0.8198204863783276,
    0.8207713249263401, 0.8217186516507552, 0.8226624684342936, 0.8236027772480867,
    0.8245395801511117, 0.8254728792896253, 0.8264026768965961, 0.8273289752911349,
    0.8282517768779251, 0.8291710841466498, 0.8300868996714192, 0.8309992261101965,
    0.8319080662042215, 0.8328134227774351, 0.8337152987359003, 0.8346136970672247,
    0.8355086208399798, 0.8364000732031208, 0.8372880573854052, 0.8381725766948102,
    0.8390536345179492, 0.8399312343194887, 0.8408053796415631, 0.8416760741031895,
    0.8425433213996821, 0.8434071253020656, 0.8442674896564883, 0.8451244183836348,
    0.8459779154781378, 0.8468279850079905, 0.8476746311139575, 0.8485178580089864,
    0.8493576699776182, 0.8501940713753985, 0.8510270666282878, 0.851856660232072,
    0.8526828567517722, 0.8535056608210563, 0.8543250771416474, 0.855141110482736,
    0.8559537656803893, 0.8567630476369615, 0.857568961320506, 0.8583715117641842,
    0.8591707040656786, 0.8599665433866029, 0.8607590349519142, 0.8615481840493253,
    0.8623339960287167, 0.8631164763015502, 0.8638956303402815, 0.8646714636777746,
    0.8654439819067163, 0.866213190679031, 0.8669790957052966, 0.8677417027541602,
    0.8685010176517559, 0.8692570462811222, 0.87000979458162, 0.8707592685483526,
    0.8715054742315853, 0.8722484177361666, 0.8729881052209498, 0.873724542898216,
    0.8744577370330977, 0.8751876939430034, 0.8759144199970438, 0.876637921615458,
    0.8773582052690417, 0.8780752774785763, 0.8787891448142587, 0.8794998138951331,
    0.8802072913885228, 0.8809115840094649, 0.8816126985201447, 0.8823106417293319,
    0.8830054204918192, 0.8836970417078599, 0.8843855123226096, 0.8850708393255674,
    0.8857530297500188, 0.8864320906724812, 0.8871080292121494, 0.8877808525303438,
    0.8884505678299593, 0.8891171823549162, 0.8897807033896127, 0.8904411382583787,
    0.8910984943249317, 0.8917527789918341, 0.8924039996999521, 0.8930521639279164,
    0.8936972791915849, 0.8943393530435064, 0.8949783930723876, 0.8956144069025596,
    0.8962474021934486, 0.8968773866390469, 0.8975043679673865, 0.8981283539400141,
    0.8987493523514682, 0.8993673710287586, 0.8999824178308469, 0.90059450064813,
    0.9012036274019246, 0.9018098060439549, 0.9024130445558407, 0.9030133509485893,
    0.9036107332620882, 0.9042051995646004, 0.9047967579522619, 0.9053854165485808,
    0.9059711835039392, 0.9065540669950967, 0.9071340752246961, 0.9077112164207725,
    0.9082854988362616, 0.9088569307485144, 0.9094255204588103, 0.9099912762918747,
    0.910554206595398, 0.9111143197395571, 0.9116716241165396, 0.9122261281400688,
    0.912777840244933, 0.9133267688865161, 0.9138729225403298, 0.9144163097015502,
    0.9149569388845541, 0.9154948186224606, 0.9160299574666723, 0.9165623639864208,
    0.9170920467683139, 0.9176190144158853, 0.9181432755491468, 0.9186648388041421,
    0.919183712832505, 0.9196999063010182, 0.9202134278911747, 0.9207242862987434,
    0.921232490233335, 0.9217380484179716, 0.9222409695886588, 0.9227412624939595,
    0.9232389358945716, 0.9237339985629066, 0.9242264592826719, 0.9247163268484552,
    0.9252036100653115, 0.9256883177483525, 0.9261704587223388, 0.9266500418212749,
    0.9271270758880055, 0.9276015697738161, 0.9280735323380352, 0.9285429724476392,
    0.9290098989768593, 0.9294743208067925, 0.9299362468250142, 0.9303956859251926,
    0.9308526470067079, 0.9313071389742715, 0.9317591707375502, 0.932208751210791,
    0.9326558893124501, 0.9331005939648234, 0.9335428740936802, 0.9339827386278995,
    0.9344201964991085, 0.9348552566413241, 0.9352879279905972, 0.9357182194846588,
    0.9361461400625699, 0.9365716986643728, 0.9369949042307462, 0.9374157657026616,
    0.9378342920210438, 0.9382504921264332, 0.9386643749586502, 0.9390759494564636,
    0.9394852245572602, 0.9398922091967188, 0.9402969123084839, 0.9406993428238457,
    0.9410995096714198, 0.9414974217768306, 0.9418930880623978, 0.9422865174468246,
    0.9426777188448889, 0.9430667011671375, 0.9434534733195818, 0.943838044203398,
    0.9442204227146271, 0.9446006177438807, 0.9449786381760471, 0.9453544928900004,
    0.9457281907583132, 0.9460997406469707, 0.946469151415088, 0.94683643191463,
    0.9472015909901332, 0.9475646374784313, 0.947925580208382, 0.9482844280005973,
    0.9486411896671759, 0.9489958740114386, 0.9493484898276655, 0.9496990459008363,
    0.9500475510063733, 0.9503940139098862, 0.9507384433669203, 0.951080848122706,
    0.9514212369119126, 0.9517596184584027, 0.9520960014749906, 0.952430394663202,
    0.952762806713037, 0.9530932463027354, 0.9534217220985444, 0.9537482427544884,
    0.9540728169121421, 0.9543954532004051, 0.9547161602352796, 0.9550349466196504,
    0.955351820943067, 0.9556667917815289, 0.9559798676972721, 0.9562910572385588,
    0.9566003689394701, 0.9569078113196995, 0.9572133928843501, 0.9575171221237336,
    0.9578190075131717, 0.9581190575128001, 0.9584172805673746, 0.9587136851060797,
    0.9590082795423391, 0.9593010722736295, 0.9595920716812955, 0.9598812861303674,
    0.9601687239693817, 0.9604543935302033, 0.9607383031278499, 0.9610204610603189,
    0.9613008756084168, 0.9615795550355904, 0.9618565075877609, 0.9621317414931587,
    0.9624052649621627, 0.9626770861871398, 0.9629472133422875, 0.9632156545834788,
    0.9634824180481091, 0.9637475118549446, 0.9640109441039744, 0.9642727228762631,
    0.9645328562338065, 0.964791352219389, 0.965048218856444, 0.9653034641489148,
    0.9655570960811188, 0.965809122617614, 0.9660595517030663, 0.9663083912621203,
    0.9665556491992708, 0.9668013333987379, 0.9670454517243422, 0.9672880120193841,
    0.9675290221065235, 0.9677684897876621, 0.968006422843828, 0.9682428290350616,
    0.9684777161003044, 0.9687110917572883, 0.9689429637024284, 0.9691733396107169,
    0.9694022271356192, 0.9696296339089714, 0.9698555675408805, 0.970080035619626,
    0.9703030457115633, 0.9705246053610292, 0.9707447220902495, 0.9709634033992475,
    0.9711806567657555, 0.9713964896451275, 0.9716109094702535, 0.9718239236514762,
    0.9720355395765091, 0.9722457646103564, 0.9724546060952347, 0.9726620713504966,
    0.9728681676725559, 0.9730729023348142, 0.9732762825875902, 0.9734783156580497,
    0.9736790087501372, 0.9738783690445107, 0.9740764036984764, 0.9742731198459256,
    0.9744685245972743, 0.9746626250394026, 0.9748554282355973, 0.9750469412254954,
    0.975237171025029, 0.9754261246263727, 0.9756138089978913, 0.9758002310840902,
    0.9759853978055669, 0.9761693160589637, 0.9763519927169227, 0.9765334346280417,
    0.9767136486168317, 0.9768926414836764, 0.9770704200047923, 0.9772469909321911,
    0.9774223609936435, 0.9775965368926435, 0.9777695253083751, 0.9779413328956809,
    0.9781119662850299, 0.97828143208249, 0.9784497368696982, 0.9786168872038358,
    0.9787828896176017, 0.9789477506191903, 0.9791114766922671, 0.9792740742959491,
    0.9794355498647846, 0.9795959098087347, 0.9797551605131556, 0.9799133083387837,
    0.9800703596217202, 0.9802263206734185, 0.9803811977806715, 0.9805349972056009,
    0.9806877251856483, 0.9808393879335658, 0.9809899916374099, 0.9811395424605345,
    0.9812880465415873, 0.9814355099945055, 0.9815819389085135, 0.9817273393481221,
    0.9818717173531277, 0.9820150789386142, 0.9821574300949546, 0.9822987767878144,
    0.9824391249581564, 0.9825784805222457, 0.9827168493716566, 0.9828542373732801,
    0.9829906503693329, 0.9831260941773666, 0.9832605745902795, 0.9833940973763273,
    0.983526668279137, 0.9836582930177199, 0.9837889772864873, 0.9839187267552657,
    0.9840475470693141, 0.9841754438493414, 0.9843024226915258, 0.9844284891675338,
    0.9845536488245413, 0.9846779071852552, 0.9848012697479357, 0.9849237419864197,
    0.9850453293501454, 0.9851660372641773, 0.9852858711292319, 0.9854048363217056,
    0.9855229381937013, 0.985640182073058, 0.98575657326338, 0.9858721170440667,
    0.9859868186703445, 0.9861006833732984, 0.9862137163599044, 0.9863259228130635,
    0.9864373078916359, 0.9865478767304758, 0.9866576344404675, 0.9867665861085618,
    0.9868747367978137, 0.9869820915474197, 0.9870886553727571, 0.9871944332654239,
    0.9872994301932779, 0.9874036511004786, 0.9875071009075279, 0.9876097845113133,
    0.9877117067851501, 0.987812872578825, 0.9879132867186408, 0.9880129540074609,
    0.9881118792247549, 0.9882100671266446, 0.988307522445951, 0.9884042498922413,
    0.9885002541518773, 0.9885955398880633, 0.9886901117408959, 0.9887839743274133,
    0.9888771322416453, 0.9889695900546649, 0.9890613523146389, 0.9891524235468798,
    0.9892428082538989, 0.9893325109154586, 0.989421535988626, 0.9895098879078272,
    0.9895975710849013, 0.9896845899091553, 0.9897709487474203, 0.9898566519441064,
    0.9899417038212599, 0.9900261086786196, 0.9901098707936743, 0.9901929944217206,
    0.9902754837959209, 0.9903573431273619, 0.9904385766051141, 0.9905191883962908,
    0.9905991826461078, 0.990678563477944, 0.9907573349934022, 0.9908355012723693,
    0.9909130663730785, 0.9909900343321706, 0.9910664091647563, 0.9911421948644786,
    0.9912173954035758, 0.9912920147329443, 0.9913660567822022, 0.9914395254597537,
    0.9915124246528523, 0.9915847582276659, 0.9916565300293415, 0.9917277438820702,
    0.9917984035891522, 0.9918685129330631, 0.9919380756755194, 0.992007095557545,
    0.9920755762995372, 0.9921435216013341, 0.9922109351422809, 0.9922778205812977,
    0.9923441815569465, 0.9924100216874996, 0.992475344571007, 0.9925401537853643,
    0.9926044528883823, 0.9926682454178541, 0.9927315348916251, 0.9927943248076617,
    0.9928566186441198, 0.9929184198594154, 0.9929797318922935, 0.9930405581618975,
    0.9931009020678403, 0.9931607669902733, 0.9932201562899572, 0.9932790733083323,
    0.9933375213675892, 0.9933955037707394, 0.993453023801686, 0.9935100847252953,
    0.9935666897874673, 0.993622842215207, 0.9936785452166965, 0.9937338019813654,
    0.9937886156799632, 0.9938429894646309, 0.9938969264689725, 0.993950429808127,
    0.9940035025788406, 0.9940561478595386, 0.9941083687103974, 0.9941601681734173,
    0.9942115492724941, 0.9942625150134918, 0.9943130683843152, 0.9943632123549819,
    0.9944129498776955, 0.9944622838869174, 0.9945112172994403, 0.99455975301446,
    0.9946078939136488, 0.994655642861228, 0.9947030027040403, 0.9947499762716234,
    0.9947965663762821, 0.994842775813161, 0.9948886073603184, 0.9949340637787977,
    0.9949791478127014, 0.9950238621892633, 0.9950682096189217, 0.9951121927953919,
    0.9951558143957391, 0.9951990770804513, 0.9952419834935123, 0.9952845362624738,
    0.9953267379985289, 0.9953685912965838, 0.9954100987353317, 0.9954512628773244,
    0.9954920862690455, 0.9955325714409824, 0.9955727209076992, 0.9956125371679092,
    0.9956520227045467, 0.99569117998484, 0.9957300114603834, 0.995768519567209,
    0.9958067067258597, 0.9958445753414603, 0.9958821278037902, 0.9959193664873547,
    0.9959562937514577, 0.9959929119402723, 0.9960292233829134, 0.9960652303935091,
    0.9961009352712715, 0.9961363403005691, 0.9961714477509971, 0.9962062598774493,
    0.996240778920189, 0.99627500710492, 0.9963089466428571, 0.9963425997307974,
    0.9963759685511905, 0.9964090552722096, 0.9964418620478211, 0.9964743910178557,
    0.9965066443080782, 0.9965386240302575, 0.9965703322822365, 0.9966017711480022,
    0.996632942697755, 0.9966638489879787, 0.9966944920615091, 0.996724873947604,
    0.9967549966620122, 0.9967848622070419, 0.9968144725716304, 0.996843829731412,
    0.9968729356487868, 0.9969017922729895, 0.996930401540157, 0.9969587653733967,
    0.9969868856828545, 0.9970147643657826, 0.9970424033066069, 0.9970698043769944,
    0.9970969694359211, 0.997123900329738, 0.997150598892239, 0.9971770669447273,
    0.9972033062960822, 0.9972293187428249, 0.9972551060691859, 0.9972806700471696,
    0.9973060124366216, 0.9973311349852937, 0.9973560394289095, 0.99738072749123,
    0.9974052008841183, 0.9974294613076053, 0.9974535104499541, 0.9974773499877244,
    0.9975009815858376, 0.9975244068976403, 0.9975476275649691, 0.9975706452182137,
    0.9975934614763815, 0.99761607794716, 0.9976384962269811, 0.9976607179010835,
    0.9976827445435759, 0.9977045777174997, 0.9977262189748912, 0.9977476698568447,
    0.9977689318935734, 0.9977900066044723, 0.9978108954981791, 0.9978316000726368,
    0.9978521218151536, 0.997872462202465, 0.9978926227007942, 0.9979126047659128,
    0.9979324098432016, 0.9979520393677104, 0.9979714947642182, 0.9979907774472929,
    0.9980098888213513, 0.9980288302807181, 0.9980476032096851, 0.9980662089825703,
    0.9980846489637768, 0.998102924507851, 0.998121036959541, 0.9981389876538552,
    0.9981567779161195, 0.9981744090620351, 0.9981918823977364, 0.9982091992198479,
    0.9982263608155412, 0.9982433684625918, 0.9982602234294358, 0.9982769269752264,
    0.9982934803498896, 0.9983098847941804, 0.9983261415397384, 0.9983422518091436,
    0.9983582168159709, 0.9983740377648461, 0.9983897158514997, 0.9984052522628225,
    0.9984206481769189, 0.9984359047631621, 0.9984510231822471, 0.9984660045862449,
    0.998480850118656, 0.998495560914463, 0.9985101381001845, 0.9985245827939275,
    0.9985388961054397, 0.998553079136162, 0.9985671329792809, 0.9985810587197801,
    0.9985948574344922, 0.99860853019215, 0.9986220780534382, 0.9986355020710437,
    0.9986488032897068, 0.9986619827462719, 0.9986750414697373, 0.9986879804813054,
    0.9987008007944328, 0.9987135034148799, 0.9987260893407601, 0.9987385595625891,
    0.9987509150633337, 0.998763156818461, 0.9987752857959861, 0.9987873029565211,
    0.9987992092533228, 0.9988110056323408, 0.9988226930322646, 0.9988342723845713,
    0.998845744613573, 0.9988571106364632, 0.9988683713633638, 0.9988795276973715,
    0.9988905805346043, 0.9989015307642471, 0.9989123792685977, 0.9989231269231125,
    0.9989337745964516, 0.9989443231505244, 0.998954773440534, 0.9989651263150221,
    0.9989753826159137, 0.9989855431785607, 0.9989956088317868, 0.9990055803979306,
    0.9990154586928898, 0.9990252445261637, 0.9990349387008972, 0.9990445420139235,
    0.9990540552558065, 0.9990634792108835, 0.9990728146573077, 0.9990820623670897,
    0.9990912231061401, 0.9991002976343103, 0.9991092867054344, 0.9991181910673704,
    0.999127011462041, 0.9991357486254744, 0.9991444032878448, 0.9991529761735128,
    0.9991614680010655, 0.9991698794833567, 0.9991782113275455, 0.9991864642351375,
    0.9991946389020223, 0.999202736018514, 0.999210756269389, 0.9992187003339252,
    0.9992265688859402, 0.9992343625938297, 0.9992420821206051, 0.9992497281239318,
    0.9992573012561663, 0.9992648021643942, 0.9992722314904665, 0.9992795898710376,
    0.999286877937601, 0.9992940963165265, 0.9993012456290967, 0.9993083264915427,
    0.9993153395150798, 0.9993222853059441, 0.9993291644654275, 0.9993359775899131,
    0.9993427252709102, 0.9993494080950893, 0.9993560266443173, 0.9993625814956913,
    0.9993690732215734, 0.9993755023896246, 0.9993818695628389, 0.999388175299577,
    0.9993944201536, 0.9994006046741025, 0.9994067294057456, 0.9994127948886904,
    0.9994188016586305, 0.9994247502468243, 0.999430641180128, 0.9994364749810272,
    0.999442252167669, 0.9994479732538945, 0.9994536387492693, 0.9994592491591158,
    0.999464804984544, 0.999470306722483, 0.9994757548657115, 0.9994811499028882,
    0.999486492318583, 0.9994917825933071, 0.9994970212035428, 0.9995022086217736,
    0.9995073453165144, 0.9995124317523403, 0.9995174683899167, 0.9995224556860282,
    0.9995273940936075, 0.9995322840617645, 0.9995371260358153, 0.9995419204573098,
    0.999546667764061, 0.9995513683901722, 0.9995560227660661, 0.9995606313185118,
    0.9995651944706523, 0.9995697126420325, 0.9995741862486265, 0.9995786157028642,
    0.9995830014136584, 0.9995873437864322, 0.9995916432231444, 0.9995959001223171,
    0.9996001148790613, 0.9996042878851031, 0.99960841952881, 0.9996125101952158,
    0.9996165602660473, 0.9996205701197487, 0.9996245401315077, 0.9996284706732801,
    0.9996323621138148, 0.9996362148186788, 0.9996400291502816, 0.9996438054678998,
    0.9996475441277011, 0.999651245482769, 0.9996549098831261, 0.9996585376757586,
    0.9996621292046395, 0.9996656848107519, 0.9996692048321133, 0.9996726896037977,
    0.9996761394579595, 0.9996795547238556, 0.999682935727869, 0.9996862827935308,
    0.9996895962415426, 0.9996928763897993, 0.9996961235534108, 0.9996993380447238,
    0.9997025201733444, 0.9997056702461592, 0.9997087885673569, 0.9997118754384497,
    0.9997149311582951, 0.999717956023116, 0.9997209503265224, 0.9997239143595323,
    0.9997268484105919, 0.9997297527655963, 0.99973262770791, 0.9997354735183877,
    0.9997382904753928, 0.9997410788548193, 0.9997438389301105, 0.9997465709722789,
    0.9997492752499261, 0.9997519520292616, 0.9997546015741228, 0.9997572241459939,
    0.9997598200040247, 0.9997623894050498, 0.9997649326036072, 0.9997674498519572,
    0.9997699414001002, 0.9997724074957961, 0.9997748483845819, 0.9997772643097896,
    0.999779655512565, 0.9997820222318846, 0.9997843647045743, 0.9997866831653262,
    0.9997889778467164, 0.9997912489792227, 0.999793496791241, 0.9997957215091032,
    0.999797923357094, 0.9998001025574677, 0.9998022593304643, 0.9998043938943276,
    0.9998065064653202, 0.999808597257741, 0.9998106664839405, 0.9998127143543377,
    0.9998147410774363, 0.9998167468598395, 0.9998187319062667, 0.9998206964195694,
    0.9998226406007459, 0.9998245646489573, 0.9998264687615429, 0.9998283531340353,
    0.9998302179601753, 0.9998320634319274, 0.9998338897394942, 0.9998356970713316,
    0.9998374856141631, 0.9998392555529947, 0.9998410070711292, 0.9998427403501805,
    0.9998444555700882, 0.9998461529091311, 0.9998478325439419, 0.9998494946495209,
    0.9998511393992493, 0.999852766964904, 0.9998543775166704, 0.999855971223156,
    0.999857548251404, 0.999859108766907, 0.9998606529336193, 0.9998621809139707,
    0.9998636928688795, 0.9998651889577652, 0.9998666693385612, 0.9998681341677278,
    0.9998695836002649, 0.9998710177897243, 0.9998724368882221, 0.9998738410464514,
    0.999875230413694, 0.9998766051378332, 0.9998779653653652, 0.9998793112414117,
    0.9998806429097313, 0.9998819605127314, 0.9998832641914801, 0.9998845540857175,
    0.9998858303338677, 0.9998870930730495, 0.9998883424390883, 0.9998895785665273,
    0.9998908015886383, 0.9998920116374334, 0.9998932088436752, 0.9998943933368885,
    0.9998955652453703, 0.9998967246962015, 0.9998978718152567, 0.999899006727215,
    0.999900129555571, 0.9999012404226443, 0.9999023394495906, 0.9999034267564115,
    0.9999045024619648, 0.9999055666839749, 0.9999066195390418, 0.9999076611426524,
    0.9999086916091892, 0.9999097110519405, 0.9999107195831104, 0.9999117173138277,
    0.999912704354156, 0.9999136808131032, 0.9999146467986302, 0.999915602417661,
    0.9999165477760914, 0.9999174829787986, 0.9999184081296495, 0.999919323331511,
    0.9999202286862575, 0.9999211242947807, 0.9999220102569985, 0.9999228866718626,
    0.9999237536373685, 0.9999246112505633, 0.9999254596075545, 0.9999262988035182,
    0.9999271289327079, 0.9999279500884621, 0.9999287623632134, 0.999929565848496,
    0.9999303606349542, 0.9999311468123502, 0.9999319244695722, 0.9999326936946423,
    0.9999334545747244, 0.9999342071961317, 0.9999349516443349, 0.9999356880039691,
    0.9999364163588426, 0.9999371367919428, 0.9999378493854454, 0.9999385542207204,
    0.9999392513783402, 0.9999399409380866, 0.9999406229789582, 0.9999412975791775,
    0.9999419648161978, 0.9999426247667105, 0.9999432775066519, 0.9999439231112104,
    0.999944561654833, 0.9999451932112324, 0.9999458178533936, 0.9999464356535808,
    0.9999470466833434, 0.9999476510135238, 0.9999482487142625, 0.9999488398550056,
    0.9999494245045111, 0.9999500027308547, 0.9999505746014365, 0.9999511401829876,
    0.9999516995415754, 0.9999522527426107, 0.9999527998508533, 0.999953340930418,
    0.9999538760447808, 0.9999544052567849, 0.9999549286286465, 0.9999554462219604,
    0.9999559580977062, 0.999956464316254, 0.9999569649373696, 0.9999574600202209,
    0.9999579496233829, 0.9999584338048436, 0.9999589126220092, 0.9999593861317101,
    0.9999598543902054, 0.9999603174531895, 0.9999607753757961, 0.9999612282126046,
    0.9999616760176444, 0.9999621188444008, 0.9999625567458199, 0.9999629897743134,
    0.999963417981764, 0.9999638414195305, 0.9999642601384523, 0.9999646741888546,
    0.9999650836205534, 0.9999654884828599, 0.999965888824586, 0.9999662846940485,
    0.9999666761390734, 0.9999670632070019, 0.9999674459446938, 0.9999678243985325,
    0.9999681986144295, 0.9999685686378292, 0.999968934513713, 0.9999692962866039,
    0.9999696540005706, 0.9999700076992324, 0.9999703574257629, 0.9999707032228948,
    0.9999710451329238, 0.9999713831977128, 0.9999717174586965, 0.9999720479568847,
    0.999972374732867, 0.9999726978268171, 0.9999730172784959, 0.9999733331272562,
    0.9999736454120466, 0.999973954171415, 0.9999742594435128, 0.9999745612660987,
    0.9999748596765426, 0.999975154711829, 0.9999754464085608, 0.9999757348029639,
    0.9999760199308892, 0.9999763018278179, 0.9999765805288641, 0.9999768560687784,
    0.9999771284819522, 0.9999773978024203, 0.999977664063865, 0.9999779272996191,
    0.9999781875426696, 0.9999784448256612, 0.9999786991808992, 0.999978950640353,
    0.9999791992356599, 0.9999794449981275, 0.9999796879587376, 0.999979928148149,
    0.9999801655967008, 0.9999804003344157, 0.9999806323910032, 0.999980861795862,
    0.9999810885780838, 0.9999813127664561, 0.999981534389465, 0.9999817534752985,
    0.9999819700518491, 0.9999821841467171, 0.9999823957872134, 0.9999826050003617,
    0.9999828118129027, 0.9999830162512954, 0.9999832183417211, 0.9999834181100854,
    0.9999836155820213, 0.999983810782892, 0.9999840037377931, 0.9999841944715556,
    0.9999843830087488, 0.9999845693736824, 0.9999847535904093, 0.9999849356827281,
    0.999985115674186, 0.9999852935880807, 0.9999854694474636, 0.9999856432751415,
    0.9999858150936796, 0.9999859849254038, 0.999986152792403, 0.9999863187165317,
    0.9999864827194119, 0.999986644822436, 0.9999868050467688, 0.9999869634133499,
    0.9999871199428956, 0.9999872746559018, 0.9999874275726456, 0.9999875787131881,
    0.9999877280973761, 0.9999878757448445, 0.9999880216750183, 0.9999881659071147,
    0.9999883084601457, 0.9999884493529194, 0.9999885886040427, 0.999988726231923,
    0.9999888622547703, 0.9999889966905995, 0.9999891295572316, 0.9999892608722967,
    0.9999893906532351, 0.9999895189172998, 0.9999896456815581, 0.9999897709628935,
    0.9999898947780078, 0.9999900171434227, 0.9999901380754818, 0.9999902575903522,
    0.9999903757040268, 0.9999904924323256, 0.9999906077908974, 0.9999907217952223,
    0.9999908344606125, 0.9999909458022147, 0.9999910558350112, 0.9999911645738224,
    0.9999912720333077, 0.9999913782279676, 0.999991483172145, 0.9999915868800273,
    0.9999916893656476, 0.9999917906428865, 0.9999918907254732, 0.9999919896269881,
    0.9999920873608632, 0.9999921839403845, 0.9999922793786928, 0.9999923736887858,
    0.9999924668835192, 0.9999925589756085, 0.9999926499776299, 0.9999927399020226,
    0.9999928287610894, 0.9999929165669986, 0.9999930033317852, 0.9999930890673522,
    0.9999931737854724, 0.9999932574977893, 0.9999933402158188, 0.9999934219509501,
    0.9999935027144475, 0.9999935825174514, 0.9999936613709798, 0.9999937392859292,
    0.9999938162730763, 0.9999938923430792, 0.9999939675064785, 0.9999940417736985,
    0.9999941151550484, 0.9999941876607239, 0.9999942593008077, 0.9999943300852714,
    0.9999944000239763, 0.9999944691266744, 0.9999945374030101, 0.9999946048625209,
    0.9999946715146384, 0.9999947373686898, 0.999994802433899, 0.9999948667193874,
    0.9999949302341751, 0.999994992987182, 0.999995054987229, 0.9999951162430386,
    0.9999951767632368, 0.999995236556353, 0.9999952956308219, 0.9999953539949842,
    0.9999954116570874, 0.9999954686252874, 0.9999955249076488, 0.999995580512146,
    0.9999956354466646, 0.9999956897190019, 0.9999957433368681, 0.999995796307887,
    0.9999958486395972, 0.9999959003394527, 0.999995951414824, 0.9999960018729991,
    0.999996051721184, 0.999996100966504, 0.9999961496160044, 0.999996197676651,
    0.9999962451553319, 0.9999962920588572, 0.9999963383939606, 0.9999963841672999,
    0.999996429385458, 0.9999964740549434, 0.9999965181821915, 0.999996561773565,
    0.9999966048353547, 0.9999966473737802, 0.9999966893949913, 0.9999967309050679,
    0.9999967719100212, 0.9999968124157945, 0.9999968524282636, 0.9999968919532379,
    0.999996930996461, 0.9999969695636113, 0.9999970076603028, 0.9999970452920856,
    0.999997082464447, 0.999997119182812, 0.9999971554525438, 0.9999971912789445,
    0.9999972266672562, 0.999997261622661, 0.9999972961502822, 0.9999973302551844,
    0.999997363942375, 0.9999973972168037, 0.9999974300833642, 0.9999974625468937,
    0.9999974946121749, 0.9999975262839353, 0.9999975575668487, 0.999997588465535,
    0.9999976189845616, 0.9999976491284434, 0.9999976789016436, 0.9999977083085744,
    0.999997737353597, 0.9999977660410231, 0.9999977943751144, 0.9999978223600839,
    0.9999978500000963, 0.9999978772992681, 0.9999979042616688, 0.9999979308913207,
    0.9999979571922002, 0.9999979831682374, 0.9999980088233177, 0.9999980341612811,
    0.9999980591859237,
];
