"""Generate the lexicon data files bundled under src/pqrank/data/.

The easy-word list is assembled from hand-curated banks of common
English words (function words, everyday verbs with their inflections,
nouns with regular plurals, adjectives, adverbs, numbers, calendar
terms). Affect ratings are hand-assigned on the scales used by the
feature extractor: valence/arousal 1-9, concreteness 0-10, sentiment
polarity -4..4. Run from the repo root:

    python tools/build_lexicons.py
"""

import csv
import os

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "pqrank", "data")

PRONOUNS = """i you he she it we they me him her us them mine yours hers ours theirs
my your his its our their myself yourself himself herself itself ourselves themselves
anybody anyone anything everybody everyone everything nobody someone something who whom
this that these those""".split()

MODALS = "can could may might must shall should will would ought".split()

DETERMINERS_PREPS = """a an the and but or nor so yet for of in on at by to from with
without about against between among through during before after above below up down
out off over under again once here there when where why how all any both each few
more most other some such no not only own same than too very just if because while
until unless since although though whether either neither as like near behind beside
inside outside onto upon within across along around past toward towards via per""".split()

ADVERBS = """quickly slowly carefully easily really actually finally usually often never
always sometimes soon later early late today tomorrow yesterday together alone almost
already also away back even ever far fast forward hard nearly now often quite rather
soon still then twice well yet everywhere somewhere nowhere anywhere maybe perhaps
certainly clearly simply suddenly quietly loudly badly deeply directly exactly fairly
freely fully gently greatly happily heavily highly honestly hardly instead likely
mostly naturally nicely probably properly safely sadly seriously shortly slightly
smoothly softly strongly surely truly warmly widely""".split()

# Verb families written out in full so irregular forms stay correct.
VERBS = """be am is are was were been being have has had having do does did done doing
go goes went gone going get gets got gotten getting make makes made making know knows
knew known knowing think thinks thought thinking take takes took taken taking see sees
saw seen seeing come comes came coming want wants wanted wanting look looks looked
looking use uses used using find finds found finding give gives gave given giving tell
tells told telling work works worked working call calls called calling try tries tried
trying ask asks asked asking need needs needed needing feel feels felt feeling become
becomes became becoming leave leaves left leaving put puts putting mean means meant
meaning keep keeps kept keeping let lets letting begin begins began begun beginning
seem seems seemed seeming help helps helped helping talk talks talked talking turn
turns turned turning start starts started starting show shows showed shown showing
hear hears heard hearing play plays played playing run runs ran running move moves
moved moving like likes liked liking live lives lived living believe believes believed
believing hold holds held holding bring brings brought bringing happen happens happened
happening write writes wrote written writing sit sits sat sitting stand stands stood
standing lose loses lost losing pay pays paid paying meet meets met meeting include
includes included including continue continues continued continuing set sets setting
learn learns learned learning change changes changed changing lead leads led leading
watch watches watched watching follow follows followed following stop stops stopped
stopping speak speaks spoke spoken speaking read reads reading spend spends spent
spending grow grows grew grown growing open opens opened opening walk walks walked
walking win wins won winning teach teaches taught teaching offer offers offered
offering remember remembers remembered remembering buy buys bought buying serve serves
served serving die dies died dying send sends sent sending build builds built building
stay stays stayed staying fall falls fell fallen falling cut cuts cutting reach reaches
reached reaching raise raises raised raising pass passes passed passing sell sells sold
selling decide decides decided deciding return returns returned returning explain
explains explained explaining hope hopes hoped hoping carry carries carried carrying
break breaks broke broken breaking receive receives received receiving agree agrees
agreed agreeing support supports supported supporting hit hits hitting eat eats ate
eaten eating cover covers covered covering catch catches caught catching draw draws
drew drawn drawing choose chooses chose chosen choosing wait waits waited waiting
fill fills filled filling check checks checked checking point points pointed pointing
close closes closed closing drive drives drove driven driving wear wears wore worn
wearing pick picks picked picking listen listens listened listening finish finishes
finished finishing save saves saved saving share shares shared sharing jump jumps
jumped jumping laugh laughs laughed laughing smile smiles smiled smiling cry cries
cried crying sing sings sang sung singing dance dances danced dancing sleep sleeps
slept sleeping wake wakes woke woken waking swim swims swam swum swimming fly flies
flew flown flying ride rides rode ridden riding throw throws threw thrown throwing
push pushes pushed pushing pull pulls pulled pulling wash washes washed washing clean
cleans cleaned cleaning cook cooks cooked cooking drink drinks drank drunk drinking
visit visits visited visiting travel travels traveled traveling plan plans planned
planning study studies studied studying count counts counted counting answer answers
answered answering rest rests rested resting climb climbs climbed climbing fix fixes
fixed fixing enjoy enjoys enjoyed enjoying thank thanks thanked thanking wish wishes
wished wishing""".split()

NOUNS = """time year day week month hour minute morning evening night people person man
woman child boy girl family friend mother father parent brother sister baby son
daughter uncle aunt cousin neighbor life world country city town place home house
school work job thing way part case point fact group number company state story side
kind head hand eye ear face arm leg foot body heart mind back word name line door
window room floor wall table chair bed kitchen garden yard street road park store
shop market office building bridge farm field river lake sea ocean beach mountain
hill forest tree flower grass leaf plant sky sun moon star cloud rain snow wind storm
fire water air earth ground stone rock sand dog cat bird fish horse cow pig sheep
chicken duck rabbit mouse bear lion tiger elephant monkey snake frog bee ant spider
food bread milk egg cheese butter meat rice soup salad fruit apple orange banana
grape lemon berry vegetable potato tomato carrot bean corn cake cookie candy sugar
salt pepper tea coffee juice dinner lunch breakfast meal money dollar cent price
paper book page letter note card pen pencil picture photo map game ball toy gift
music song movie show team player coach race prize clothes shirt dress coat hat shoe
sock glove pocket button color red blue green yellow black white brown pink purple
gray car bus train plane boat ship bike truck wheel engine ticket trip bag box cup
glass plate bowl spoon fork knife bottle basket key lock clock watch phone radio
computer machine tool nail hammer rope chain wire light lamp candle shadow sound
voice noise smell taste touch feeling idea question answer problem reason result
lesson class test grade teacher student doctor nurse farmer driver worker police
officer cook artist singer writer king queen president leader neighbor guest crowd
party meeting club church bell holiday summer winter spring fall season weather heat
cold ice age end start middle top bottom corner edge center circle square shape size
piece half inch foot mile pound weight height depth length width space distance speed
step walk path gate fence roof floor stair brick board wood glass metal gold silver
iron paper cloth cotton wool leather skin hair tooth bone blood breath sleep dream
smile laugh tear joy fear hope luck trouble danger safety health sickness medicine
pain rest hobby habit choice chance turn visit guest journey adventure mystery secret
truth lie joke news report sign mark spot trace hole crack gap area region zone
border land island coast valley desert jungle cave spring stream pond pool wave tide
current bay harbor port dock deck sail anchor captain crew passenger luggage""".split()

ADJECTIVES = """good better best bad worse worst big bigger biggest small smaller
smallest large larger largest little great new old young long short tall high low
early late easy hard soft loud quiet fast slow hot cold warm cool wet dry clean dirty
full empty heavy light strong weak rich poor happy sad angry glad kind mean nice fine
pretty ugly fair dark bright clear cloudy sunny rainy windy snowy round flat deep
shallow wide narrow thick thin sharp dull smooth rough tight loose open closed free
busy ready safe dangerous careful careless proud shy brave afraid calm nervous tired
fresh sweet sour bitter salty hungry thirsty sick well healthy true false real wrong
right whole broken lucky funny serious silly smart wise foolish friendly lonely polite
rude lazy active quick gentle wild tame neat messy plain fancy cheap dear useful
useless common rare simple different similar important famous popular favorite main
certain sure possible impossible perfect terrible wonderful beautiful handsome lovely
pleasant awful strange normal usual special extra double single several many much
enough final first second third last next near far close distant inner outer upper
lower northern southern eastern western modern ancient local foreign national public
private whole equal even odd straight curved golden silver wooden plastic paper
stone metal glass cotton woolen leather daily weekly monthly yearly""".split()

EXTRAS = """one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty sixty
seventy eighty ninety hundred thousand million first second third fourth fifth sixth
seventh eighth ninth tenth monday tuesday wednesday thursday friday saturday sunday
january february march april may june july august september october november december
north south east west left right yes okay hello goodbye please sorry welcome oh wow
hey hi bye noon midnight tonight weekend birthday holiday everyone everything
somebody nothing none both another every upstairs downstairs indoors outdoors
anyway anywhere meanwhile moreover however therefore besides unless almost
across ahead apart aside downtown overseas abroad nearby faraway sometime someday
anytime nowadays tonight whoever whatever whenever wherever whichever o'clock""".split()

NOUNS2 = """morning afternoon evening midnight sunrise sunset breakfast supper snack
dessert pie jam honey flour oil sauce pasta noodle sandwich pizza burger fries steak
bacon ham sausage turkey salmon tuna shrimp crab lobster oyster pear peach plum cherry
melon mango pineapple coconut walnut peanut almond raisin onion garlic cabbage lettuce
spinach cucumber pumpkin mushroom pea nut seed root branch trunk bark twig bud stem
petal vine bush weed moss fern pine oak maple willow cedar birch palm bamboo log
stick pebble boulder cliff slope peak ridge trail track lane alley avenue highway
tunnel subway station airport runway harbor wharf pier ferry canoe kayak raft yacht
helicopter rocket wagon cart sled scooter skate ski surfboard tent cabin cottage hut
castle palace tower temple chapel museum library theater cinema stadium gym pool
court field rink arena playground swing slide seesaw sandbox fountain statue bench
lawn hedge gate mailbox porch balcony attic basement garage shed closet shelf drawer
cabinet counter sink oven stove fridge freezer toaster kettle pan pot lid tray jar
can bucket barrel crate carton envelope stamp package parcel string ribbon tape glue
scissors ruler eraser crayon marker chalk folder notebook diary journal magazine
newspaper poster banner flag badge medal trophy crown ring necklace bracelet earring
wallet purse backpack suitcase umbrella cane ladder broom mop sponge towel blanket
pillow sheet curtain carpet rug mirror frame painting drawing sketch pattern stripe
dot patch knot thread needle pin zipper collar sleeve belt scarf mitten boot sandal
slipper cap helmet mask uniform costume apron vest jacket sweater jeans shorts skirt
blouse robe pajamas diaper bib cradle crib stroller bottle rattle doll puzzle kite
marble dice chess checkers domino lamp flashlight torch lantern switch plug socket
battery bulb fan heater furnace chimney pipe drain faucet hose sprinkler shovel rake
hoe axe saw drill wrench pliers screwdriver screw bolt brush comb razor soap shampoo
lotion perfume tissue napkin plate saucer mug pitcher thermos grill picnic campfire
marshmallow lemonade cocoa syrup pancake waffle muffin bagel donut pretzel popcorn
cracker chip dip salsa taco burrito sushi curry stew chili gravy biscuit roll bun
loaf crust slice crumb feast banquet buffet menu recipe ingredient spice herb mint
vanilla cinnamon ginger mustard ketchup vinegar pickle olive""".split()

ADJ_FOR_LY = """quick slow careful quiet loud soft gentle bright clear sharp smooth
rough calm brave proud kind rude polite neat plain simple strange normal usual
special certain perfect serious silly wise foolish friendly lovely active wild tame
cheap dear useful common rare different similar important famous popular main final
near close distant local modern ancient public private equal straight golden daily
weekly monthly yearly warm cool cold deep wide tight loose free busy safe fresh
sweet bitter true real whole lucky funny smart fair dark full heavy light strong
weak rich happy sad angry glad nice fine pretty""".split()

STOPWORDS = """a about above after again against all am an and any are aren't as at be
because been before being below between both but by can't cannot could couldn't did
didn't do does doesn't doing don't down during each few for from further had hadn't
has hasn't have haven't having he he'd he'll he's her here here's hers herself him
himself his how how's i i'd i'll i'm i've if in into is isn't it it's its itself
let's me more most mustn't my myself no nor not of off on once only or other ought
our ours ourselves out over own same shan't she she'd she'll she's should shouldn't
so some such than that that's the their theirs them themselves then there there's
these they they'd they'll they're they've this those through to too under until up
very was wasn't we we'd we'll we're we've were weren't what what's when when's where
where's which while who who's whom why why's with won't would wouldn't you you'd
you'll you're you've your yours yourself yourselves""".split()

# word -> (valence 1-9, arousal 1-9); authored, loosely following the
# usual pleasantness/intensity conventions for affect norms.
AFFECT = {
    "love": (8.0, 6.4), "happy": (8.2, 6.5), "joy": (8.2, 5.9), "smile": (7.9, 5.0),
    "laugh": (8.2, 6.7), "win": (8.4, 7.3), "winner": (8.0, 6.8), "prize": (7.6, 6.0),
    "gift": (7.7, 5.5), "friend": (7.7, 5.7), "hope": (7.6, 5.8), "peace": (7.9, 3.0),
    "calm": (6.9, 1.7), "gentle": (7.3, 3.2), "sweet": (7.1, 4.4), "warm": (7.3, 3.8),
    "sunny": (7.5, 5.3), "beach": (8.0, 5.5), "holiday": (8.0, 6.6), "party": (7.6, 6.7),
    "music": (8.1, 5.3), "dance": (7.8, 6.8), "baby": (7.3, 5.3), "kitten": (7.6, 5.1),
    "puppy": (7.9, 5.9), "flower": (7.9, 4.0), "garden": (7.4, 3.6), "rainbow": (8.1, 4.6),
    "free": (8.3, 5.2), "freedom": (7.9, 5.5), "success": (8.3, 6.1), "succeed": (8.0, 6.0),
    "wonderful": (8.3, 5.7), "beautiful": (7.9, 5.5), "excellent": (8.1, 5.5),
    "perfect": (7.8, 5.6), "amazing": (7.9, 6.3), "great": (7.6, 5.8), "good": (7.5, 4.9),
    "nice": (7.0, 4.2), "pleasant": (7.3, 3.5), "comfort": (7.1, 3.4), "safe": (7.1, 3.8),
    "brave": (7.2, 6.1), "proud": (7.5, 5.9), "glad": (7.5, 5.3), "rich": (7.3, 6.2),
    "treasure": (7.4, 6.0), "gold": (7.2, 5.8), "angel": (7.5, 4.6), "heaven": (7.8, 5.0),
    "hero": (7.7, 6.3), "victory": (8.1, 6.9), "celebrate": (8.1, 6.9),
    "death": (1.6, 4.6), "dead": (1.9, 5.7), "die": (1.7, 5.0), "kill": (1.8, 6.5),
    "murder": (1.5, 6.8), "war": (1.8, 7.3), "weapon": (2.4, 6.0), "gun": (2.8, 6.4),
    "bomb": (2.0, 7.2), "attack": (2.2, 6.8), "fight": (2.8, 6.7), "enemy": (2.5, 6.0),
    "hate": (2.1, 6.0), "anger": (2.3, 6.3), "angry": (2.5, 6.6), "rage": (2.2, 7.0),
    "fear": (2.3, 6.4), "afraid": (2.4, 6.0), "terror": (1.9, 7.2), "panic": (2.3, 7.1),
    "horror": (2.0, 6.9), "nightmare": (2.2, 6.5), "pain": (2.0, 5.9), "hurt": (2.2, 5.7),
    "sick": (2.3, 4.7), "disease": (1.9, 5.4), "cancer": (1.5, 6.1), "poison": (2.0, 5.9),
    "danger": (2.6, 6.8), "dangerous": (2.6, 6.6), "crisis": (2.3, 6.2), "disaster": (1.9, 6.6),
    "accident": (2.3, 6.0), "crash": (2.4, 6.4), "storm": (3.6, 6.1), "flood": (2.7, 5.8),
    "prison": (2.3, 5.3), "crime": (2.4, 5.7), "thief": (2.6, 5.5), "steal": (2.5, 5.6),
    "lie": (2.6, 5.2), "cheat": (2.3, 5.6), "cruel": (2.0, 5.8), "evil": (2.0, 6.1),
    "sad": (2.1, 4.1), "cry": (2.5, 5.1), "tear": (3.0, 4.7), "lonely": (2.3, 4.5),
    "loss": (2.5, 5.1), "fail": (2.4, 5.4), "failure": (2.2, 5.4), "poor": (2.7, 4.6),
    "broken": (2.8, 4.6), "dirty": (3.1, 4.3), "ugly": (2.7, 4.7), "trash": (3.0, 3.9),
    "angst": (2.8, 5.6), "worry": (2.8, 5.5), "stress": (2.4, 6.2), "trouble": (2.7, 5.5),
    "shock": (3.0, 6.8), "shocking": (3.1, 6.7), "scream": (2.9, 7.0), "explosion": (2.6, 7.3),
    "thrill": (7.0, 7.6), "thrilling": (7.1, 7.4), "excited": (7.6, 7.4),
    "excitement": (7.6, 7.2), "adventure": (7.4, 6.9), "surprise": (7.0, 6.7),
    "stunning": (7.2, 6.2), "explosive": (3.3, 7.0), "outrageous": (3.4, 6.4),
    "dazzling": (7.3, 6.0), "astonishing": (6.8, 6.4), "scandalous": (3.2, 6.1),
    "gripping": (6.2, 6.0), "electrifying": (6.9, 7.3), "bombshell": (3.6, 6.9),
    "spectacular": (7.6, 6.3), "unbelievable": (6.3, 6.2), "sensational": (6.9, 6.5),
    "breathtaking": (7.6, 6.6), "riveting": (6.5, 6.1), "staggering": (4.4, 6.0),
    "table": (5.2, 2.9), "chair": (5.1, 2.6), "window": (5.4, 2.6), "door": (5.1, 2.8),
    "paper": (5.1, 2.5), "pencil": (5.2, 2.7), "street": (5.2, 3.3), "office": (4.7, 3.5),
    "market": (5.5, 4.1), "report": (4.8, 3.6), "meeting": (4.4, 3.8), "budget": (4.3, 3.9),
    "system": (5.0, 3.4), "service": (5.4, 3.5), "member": (5.3, 3.3), "council": (4.8, 3.4),
    "water": (6.5, 3.1), "tree": (6.4, 2.8), "house": (6.6, 3.4), "book": (6.4, 3.2),
    "school": (5.6, 4.3), "teacher": (5.9, 4.0), "doctor": (5.5, 4.6), "money": (6.9, 6.0),
    "work": (4.9, 4.2), "sleep": (7.2, 2.6), "rest": (6.8, 2.2), "quiet": (5.9, 2.3),
    "slow": (4.5, 2.9), "boring": (2.9, 2.6), "dull": (3.4, 2.5), "tired": (3.4, 2.8),
}

# word -> concreteness on a 0-10 scale (10 = directly perceptible).
CONCRETENESS = {
    "chair": 9.6, "table": 9.6, "dog": 9.7, "cat": 9.7, "apple": 9.6, "water": 9.4,
    "house": 9.3, "car": 9.5, "tree": 9.6, "book": 9.4, "door": 9.4, "window": 9.4,
    "hand": 9.4, "foot": 9.4, "eye": 9.5, "bread": 9.4, "milk": 9.5, "egg": 9.5,
    "stone": 9.3, "rock": 9.2, "sand": 9.3, "rain": 9.2, "snow": 9.4, "fire": 9.2,
    "river": 9.2, "mountain": 9.2, "street": 9.0, "school": 8.7, "paper": 9.3,
    "pencil": 9.6, "phone": 9.5, "computer": 9.4, "bed": 9.5, "shirt": 9.5,
    "shoe": 9.6, "ball": 9.5, "train": 9.4, "boat": 9.4, "bird": 9.5, "fish": 9.5,
    "horse": 9.6, "flower": 9.5, "garden": 8.9, "kitchen": 9.2, "money": 8.9,
    "coffee": 9.5, "tea": 9.4, "bottle": 9.5, "glass": 9.3, "knife": 9.6,
    "teacher": 8.6, "doctor": 8.7, "baby": 9.3, "crowd": 8.2, "voice": 7.9,
    "music": 7.8, "noise": 7.6, "smell": 7.5, "walk": 7.9, "run": 8.0, "jump": 8.3,
    "smile": 8.5, "laugh": 8.4, "sleep": 7.9, "eat": 8.9, "drink": 8.9,
    "idea": 2.0, "thought": 2.6, "truth": 2.2, "freedom": 2.3, "justice": 2.2,
    "hope": 2.4, "faith": 2.1, "luck": 2.5, "chance": 2.8, "reason": 2.7,
    "belief": 2.2, "theory": 2.7, "concept": 2.2, "spirit": 2.8, "soul": 2.5,
    "honor": 2.6, "pride": 3.0, "courage": 2.9, "wisdom": 2.5, "knowledge": 3.0,
    "opinion": 2.6, "purpose": 2.5, "meaning": 2.4, "value": 3.0, "virtue": 2.3,
    "democracy": 3.1, "policy": 3.2, "economy": 3.4, "culture": 3.3, "society": 3.4,
    "system": 3.5, "method": 3.2, "process": 3.5, "result": 3.4, "effect": 3.2,
    "cause": 3.0, "problem": 3.4, "question": 3.9, "answer": 3.8, "issue": 3.2,
    "moment": 3.3, "future": 2.8, "past": 3.0, "history": 3.6, "memory": 3.4,
    "dream": 3.6, "story": 4.4, "news": 4.6, "word": 5.5, "letter": 7.8,
    "love": 3.4, "hate": 3.0, "fear": 3.6, "anger": 3.8, "joy": 3.3, "sadness": 3.2,
    "happiness": 3.0, "beauty": 3.3, "danger": 3.7, "safety": 3.4, "health": 4.0,
    "power": 3.5, "energy": 4.0, "force": 3.9, "peace": 2.9, "war": 6.0,
    "game": 6.7, "team": 6.9, "player": 8.0, "coach": 8.3, "race": 7.4,
    "report": 5.9, "meeting": 6.3, "office": 8.0, "market": 7.6, "budget": 4.5,
    "plan": 3.8, "support": 3.4, "change": 3.2, "growth": 3.9, "success": 3.0,
    "failure": 3.1, "victory": 4.0, "effort": 3.3, "work": 5.4, "job": 6.0,
}

# word -> polarity in [-4, 4], VADER-style intensities.
SENTIMENT = {
    "good": 1.9, "great": 3.1, "excellent": 2.7, "wonderful": 2.7, "amazing": 2.8,
    "awesome": 3.1, "fantastic": 2.6, "perfect": 2.7, "best": 3.2, "better": 1.9,
    "beautiful": 2.9, "lovely": 2.8, "nice": 1.8, "pleasant": 2.3, "happy": 2.7,
    "glad": 2.0, "joy": 2.8, "love": 3.2, "loved": 2.9, "loves": 2.9, "like": 1.5,
    "liked": 1.8, "likes": 1.8, "enjoy": 2.2, "enjoyed": 2.3, "fun": 2.3,
    "funny": 1.9, "smile": 2.1, "laugh": 2.2, "win": 2.8, "winner": 2.8,
    "winning": 2.4, "won": 2.7, "success": 2.7, "successful": 2.6, "succeed": 2.4,
    "triumph": 2.9, "victory": 2.9, "brilliant": 2.8, "superb": 3.0, "delight": 2.9,
    "delighted": 2.9, "impressive": 2.3, "remarkable": 2.0, "outstanding": 3.0,
    "positive": 2.3, "hope": 1.9, "hopeful": 2.2, "promising": 1.9, "improve": 1.7,
    "improved": 1.9, "improvement": 1.6, "thank": 1.7, "thanks": 1.9, "thankful": 2.4,
    "grateful": 2.6, "praise": 2.4, "celebrate": 2.6, "proud": 2.1, "strong": 1.8,
    "stronger": 1.9, "safe": 1.6, "safer": 1.8, "calm": 1.3, "gentle": 1.6,
    "kind": 2.0, "friendly": 2.2, "generous": 2.3, "brave": 2.2, "heroic": 2.6,
    "hero": 2.5, "stunning": 2.4, "dazzling": 2.4, "spectacular": 2.7,
    "breathtaking": 2.6, "thrilling": 2.2, "sensational": 2.1, "riveting": 1.8,
    "electrifying": 2.0, "gripping": 1.4, "astonishing": 1.6,
    "bad": -2.5, "worse": -2.1, "worst": -3.1, "terrible": -3.1, "awful": -3.0,
    "horrible": -2.9, "poor": -1.9, "sad": -2.1, "unhappy": -1.8, "angry": -2.3,
    "anger": -2.2, "mad": -2.2, "hate": -2.7, "hated": -2.6, "hates": -2.6,
    "fear": -2.2, "afraid": -2.0, "scared": -2.2, "scary": -2.2, "terror": -3.1,
    "horror": -2.7, "panic": -2.4, "pain": -2.3, "painful": -2.4, "hurt": -2.1,
    "sick": -1.8, "ill": -1.7, "disease": -1.9, "die": -2.9,
    "died": -2.8, "dead": -2.9, "death": -2.9, "kill": -3.4, "killed": -3.2,
    "murder": -3.6, "war": -2.9, "attack": -2.2, "fight": -1.7, "enemy": -2.1,
    "violent": -2.8, "violence": -2.9, "crime": -2.3, "criminal": -2.4,
    "steal": -2.2, "stolen": -2.1, "thief": -2.1, "lie": -1.8, "liar": -2.4,
    "cheat": -2.3, "cruel": -2.8, "evil": -3.3, "wrong": -1.6, "fail": -2.3,
    "failed": -2.3, "failure": -2.4, "lose": -1.7, "loss": -1.8, "lost": -1.5,
    "broken": -1.6, "crisis": -2.3, "disaster": -2.9, "danger": -2.2,
    "dangerous": -2.2, "threat": -2.1, "risk": -1.3, "problem": -1.5,
    "trouble": -1.8, "worry": -1.6, "worried": -1.7, "stress": -1.8,
    "ugly": -2.2, "dirty": -1.6, "nasty": -2.4, "annoying": -1.9, "boring": -1.5,
    "dull": -1.2, "weak": -1.4, "scandal": -2.1, "scandalous": -2.0,
    "outrageous": -1.9, "shocking": -1.5, "shock": -1.3, "bomb": -2.4,
    "bombshell": -1.1, "explosive": -1.3, "explosion": -2.0, "jarring": -1.2,
    "incendiary": -1.5, "seismic": -0.6, "staggering": -0.6, "blistering": -1.0,
}


def plural(noun):
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 2 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def derived_adverbs():
    out = []
    for adj in ADJ_FOR_LY:
        if adj.endswith("y") and adj[-2] not in "aeiou":
            out.append(adj[:-1] + "ily")
        elif adj.endswith("le"):
            out.append(adj[:-1] + "y")
        elif adj.endswith("ll"):
            out.append(adj + "y")
        else:
            out.append(adj + "ly")
    return out


def build_easy_words():
    words = set()
    for bank in (PRONOUNS, MODALS, DETERMINERS_PREPS, ADVERBS, VERBS, EXTRAS):
        words.update(bank)
    for noun in NOUNS + NOUNS2:
        words.add(noun)
        words.add(plural(noun))
    words.update(ADJECTIVES)
    words.update(derived_adverbs())
    words.update(STOPWORDS)
    return sorted(w for w in words if w)


def build_tagger_lexicon():
    table = {}

    def put(bank, tag):
        for w in bank:
            table.setdefault(w, tag)

    put(PRONOUNS, "PRP")
    put(MODALS, "MD")
    put(DETERMINERS_PREPS, "OTHER")
    put(STOPWORDS, "OTHER")
    put(ADVERBS, "RB")
    put(derived_adverbs(), "RB")
    put(VERBS, "VB")
    put(ADJECTIVES, "JJ")
    put(NOUNS + NOUNS2, "NN")
    for noun in NOUNS + NOUNS2:
        table.setdefault(plural(noun), "NN")
    put(EXTRAS, "OTHER")
    return dict(sorted(table.items()))


def write_csv(path, rows, header):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def main():
    os.makedirs(OUT_DIR, exist_ok=True)

    easy = build_easy_words()
    with open(os.path.join(OUT_DIR, "easy_words.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(easy) + "\n")
    print(f"easy_words.txt: {len(easy)} words")

    with open(os.path.join(OUT_DIR, "stopwords.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(sorted(set(STOPWORDS))) + "\n")
    print(f"stopwords.txt: {len(set(STOPWORDS))} words")

    write_csv(os.path.join(OUT_DIR, "valence.csv"),
              sorted((w, f"{v[0]:.1f}") for w, v in AFFECT.items()), ["word", "rating"])
    write_csv(os.path.join(OUT_DIR, "arousal.csv"),
              sorted((w, f"{v[1]:.1f}") for w, v in AFFECT.items()), ["word", "rating"])
    write_csv(os.path.join(OUT_DIR, "concreteness.csv"),
              sorted((w, f"{v:.1f}") for w, v in CONCRETENESS.items()), ["word", "rating"])
    write_csv(os.path.join(OUT_DIR, "sentiment.csv"),
              sorted((w, f"{v:.1f}") for w, v in SENTIMENT.items()), ["word", "rating"])
    print(f"affect lexicons: {len(AFFECT)} valence/arousal, "
          f"{len(CONCRETENESS)} concreteness, {len(SENTIMENT)} sentiment")

    tagger = build_tagger_lexicon()
    write_csv(os.path.join(OUT_DIR, "tagger_lexicon.csv"),
              sorted(tagger.items()), ["word", "tag"])
    print(f"tagger_lexicon.csv: {len(tagger)} entries")


if __name__ == "__main__":
    main()
