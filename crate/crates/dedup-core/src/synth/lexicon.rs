//! Embedded word lists for synthetic identities.
//!
//! Alphabetical order is load-bearing for FIRST_NAMES: related-entity
//! generation picks lexicon neighbors, and alphabetical neighbors tend to
//! be near-collisions ("brendan"/"brett"), which is exactly the hard
//! negative the fuzzy stage should be stress-tested against.

pub const FIRST_NAMES: &[&str] = &[
    "aaron", "abigail", "adam", "adrian", "adriana", "aidan", "alan", "albert", "alejandro",
    "alex", "alexa", "alexander", "alexandra", "alexis", "alice", "alicia", "allison", "alyssa",
    "amanda", "amber", "amelia", "amy", "ana", "andrea", "andrew", "angel", "angela", "angelina",
    "anna", "anne", "anthony", "antonio", "april", "ariana", "arthur", "ashley", "aubrey",
    "audrey", "austin", "autumn", "ava", "avery", "bailey", "barbara", "benjamin", "bernard",
    "beth", "bethany", "betty", "beverly", "blake", "bonnie", "bradley", "brandon", "brandy",
    "breanna", "brenda", "brendan", "brett", "brian", "briana", "brianna", "brittany", "brooke",
    "bruce", "bryan", "bryce", "caleb", "cameron", "camila", "carl", "carla", "carlos", "carmen",
    "carol", "caroline", "carolyn", "carrie", "carson", "casey", "cassandra", "catherine",
    "cathy", "cecilia", "cesar", "chad", "charles", "charlotte", "chase", "chelsea", "cheryl",
    "chloe", "chris", "christian", "christina", "christine", "christopher", "cindy", "claire",
    "clara", "clarence", "claudia", "clayton", "cody", "cole", "colin", "colleen", "connor",
    "cooper", "corey", "courtney", "craig", "crystal", "curtis", "cynthia", "dakota", "dale",
    "dalton", "damian", "dan", "dana", "daniel", "daniela", "danielle", "danny", "darius",
    "darlene", "darrell", "darren", "david", "dawn", "dean", "deanna", "deborah", "debra",
    "denise", "dennis", "derek", "derrick", "destiny", "devin", "devon", "diana", "diane",
    "diego", "dominic", "donald", "donna", "dorothy", "douglas", "dustin", "dylan", "eddie",
    "edgar", "edith", "edward", "edwin", "elaine", "eleanor", "elena", "eli", "elias", "elijah",
    "elizabeth", "ella", "ellen", "emily", "emma", "eric", "erica", "erik", "erika", "erin",
    "ernest", "ethan", "eugene", "eva", "evan", "evelyn", "faith", "felicia", "felix",
    "fernando", "fiona", "frances", "francis", "francisco", "frank", "franklin", "fred",
    "gabriel", "gabriela", "gabrielle", "gail", "garrett", "gary", "gavin", "gene", "geoffrey",
    "george", "gerald", "gilbert", "gina", "giovanni", "glen", "glenn", "gloria", "gordon",
    "grace", "grant", "gregory", "hailey", "haley", "hannah", "harold", "harper", "harry",
    "hayden", "heather", "hector", "heidi", "helen", "henry", "herbert", "holly", "hope",
    "howard", "hunter", "ian", "irene", "iris", "isaac", "isabel", "isabella", "isaiah", "ivan",
    "jack", "jackson", "jacob", "jacqueline", "jade", "jaime", "jake", "james", "jamie", "jane",
    "janet", "janice", "jared", "jasmine", "jason", "javier", "jay", "jean", "jeffrey", "jenna",
    "jennifer", "jeremiah", "jeremy", "jerome", "jerry", "jesse", "jessica", "jesus", "jill",
    "jimmy", "joan", "joanna", "joanne", "jocelyn", "joel", "joey", "john", "johnny", "jon",
    "jonathan", "jordan", "jorge", "jose", "joseph", "josephine", "joshua", "josiah", "joyce",
    "juan", "juanita", "judith", "judy", "julia", "julian", "julie", "justin", "kaitlyn",
    "karen", "katelyn", "katherine", "kathleen", "kathryn", "katie", "kayla", "keith", "kelly",
    "kelsey", "kenneth", "kevin", "kimberly", "kyle", "larry", "laura", "lauren", "lawrence",
    "leah", "leonard", "leslie", "liam", "lillian", "linda", "lisa", "logan", "lori", "louis",
    "lucas", "luis", "luke", "lydia", "madison", "makayla", "manuel", "marcus", "margaret",
    "maria", "marilyn", "mario", "mark", "martha", "martin", "marvin", "mary", "mason",
    "matthew", "maya", "megan", "melanie", "melissa", "michael", "michelle", "miguel", "mildred",
    "molly", "monica", "morgan", "nancy", "natalie", "nathan", "nathaniel", "nicholas", "nicole",
    "noah", "nolan", "norma", "oliver", "olivia", "omar", "oscar", "owen", "pamela", "patricia",
    "patrick", "paul", "paula", "pedro", "peter", "philip", "phillip", "phyllis", "rachel",
    "ralph", "ramon", "randy", "raymond", "rebecca", "regina", "renee", "ricardo", "richard",
    "rita", "robert", "roberta", "roberto", "rodney", "roger", "ronald", "rose", "roy", "ruben",
    "russell", "ruth", "ryan", "sabrina", "samantha", "samuel", "sandra", "sara", "sarah",
    "scott", "sean", "sebastian", "sergio", "seth", "shane", "shannon", "sharon", "shawn",
    "sheila", "shirley", "sierra", "sofia", "sophia", "spencer", "stanley", "stephanie",
    "stephen", "steven", "susan", "sydney", "tammy", "tanner", "tara", "taylor", "teresa",
    "terry", "theodore", "theresa", "thomas", "tiffany", "timothy", "tina", "todd", "tracy",
    "travis", "trevor", "tristan", "tyler", "valerie", "vanessa", "veronica", "victor",
    "victoria", "vincent", "virginia", "walter", "wanda", "wayne", "wendy", "wesley", "william",
    "willie", "wyatt", "xavier", "zachary", "zoe",
];

pub const SURNAMES: &[&str] = &[
    "adams", "aguilar", "alexander", "allen", "alvarado", "alvarez", "anderson", "andrews",
    "armstrong", "arnold", "atkinson", "austin", "bailey", "baker", "baldwin", "ball", "banks",
    "barber", "barker", "barnes", "barnett", "barrett", "bartlett", "barton", "bass", "bates",
    "bauer", "beasley", "beck", "becker", "bell", "bennett", "benson", "berry", "bishop",
    "black", "blackburn", "blair", "blake", "blankenship", "bolton", "bond", "bonner", "booth",
    "bowen", "bowers", "bowman", "boyd", "boyer", "bradford", "bradley", "bradshaw", "brady",
    "branch", "brennan", "brewer", "bridges", "briggs", "bright", "brock", "brooks", "brown",
    "browning", "bruce", "bryan", "bryant", "buchanan", "buck", "buckley", "bullock", "burgess",
    "burke", "burnett", "burns", "burton", "bush", "butler", "byrd", "cabrera", "cain",
    "calderon", "caldwell", "calhoun", "callahan", "camacho", "cameron", "campbell", "campos",
    "cannon", "cantrell", "cardenas", "carey", "carlson", "carney", "carpenter", "carr",
    "carrillo", "carroll", "carson", "carter", "case", "casey", "castaneda", "castillo",
    "castro", "cervantes", "chambers", "chan", "chandler", "chaney", "chang", "chapman",
    "charles", "chase", "chavez", "chen", "cherry", "christensen", "christian", "church",
    "clark", "clarke", "clay", "clayton", "clements", "cline", "cobb", "cochran", "coffey",
    "cohen", "cole", "coleman", "collier", "collins", "colon", "combs", "compton", "conley",
    "conner", "conrad", "contreras", "conway", "cook", "cooke", "cooley", "cooper", "copeland",
    "cordova", "cortez", "costa", "cote", "cotton", "cox", "craig", "crane", "crawford",
    "crosby", "cross", "cruz", "cummings", "cunningham", "curry", "curtis", "dalton", "daniel",
    "daniels", "daugherty", "davenport", "david", "davidson", "davis", "dawson", "day", "dean",
    "decker", "delacruz", "delaney", "deleon", "delgado", "dennis", "diaz", "dickerson",
    "dickson", "dillard", "dillon", "dixon", "dodson", "dominguez", "donaldson", "donovan",
    "dorsey", "dougherty", "douglas", "downs", "doyle", "drake", "dudley", "duffy", "duke",
    "duncan", "dunlap", "dunn", "duran", "durham", "dyer", "eaton", "edwards", "elliott",
    "ellis", "ellison", "emerson", "england", "english", "erickson", "espinoza", "estes",
    "estrada", "evans", "everett", "ewing", "farley", "farmer", "farrell", "faulkner",
    "ferguson", "fernandez", "fields", "figueroa", "finley", "fischer", "fisher", "fitzgerald",
    "fitzpatrick", "fleming", "fletcher", "flores", "flowers", "floyd", "flynn", "foley",
    "forbes", "ford", "foster", "fowler", "fox", "francis", "franco", "frank", "franklin",
    "frazier", "frederick", "freeman", "french", "frost", "fry", "frye", "fuentes", "fuller",
    "gaines", "gallagher", "gallegos", "galloway", "gamble", "garcia", "gardner", "garner",
    "garrett", "garrison", "garza", "gates", "gay", "gentry", "george", "gibbs", "gibson",
    "gilbert", "giles", "gill", "gillespie", "gilliam", "gilmore", "glass", "glenn", "glover",
    "goff", "golden", "gomez", "gonzales", "gonzalez", "good", "goodman", "goodwin", "gordon",
    "gould", "graham", "grant", "graves", "gray", "green", "greene", "greer", "gregory",
    "griffin", "griffith", "grimes", "gross", "guerra", "guerrero", "guthrie", "gutierrez",
    "guzman", "hahn", "hale", "haley", "hall", "hamilton", "hammond", "hampton", "hancock",
    "haney", "hansen", "hanson", "hardin", "harding", "hardy", "harmon", "harper", "harrell",
    "harrington", "harris", "harrison", "hart", "hartman", "harvey", "hatfield", "hawkins",
    "hayden", "hayes", "haynes", "hays", "head", "heath", "hebert", "henderson", "hendricks",
    "hendrix", "henry", "hensley", "henson", "herman", "hernandez", "herrera", "herring",
    "hess", "hester", "hickman", "hicks", "higgins", "hill", "hines", "hinton", "hobbs",
    "hodge", "hodges", "hoffman", "hogan", "holcomb", "holden", "holder", "holland", "holloway",
    "holmes", "holt", "hood", "hooper", "hoover", "hopkins", "hopper", "horn", "horne",
    "horton", "house", "houston", "howard", "howe", "howell", "hubbard", "huber", "hudson",
    "huff", "huffman", "hughes", "hull", "humphrey", "hunt", "hunter", "hurley", "hurst",
    "hutchinson", "hyde", "ingram", "irwin", "jackson", "jacobs", "jacobson", "james",
    "jarvis", "jefferson", "jenkins", "jennings", "jensen", "jimenez", "johns", "johnson",
    "johnston", "jones", "jordan", "joseph", "joyce", "juarez", "justice", "kane", "kaufman",
    "keith", "keller", "kelley", "kelly", "kemp", "kennedy", "kent", "kerr", "key", "kidd",
    "kim", "king", "kirby", "kirk", "kirkland", "klein", "knapp", "knight", "knox", "koch",
    "kramer", "lamb", "lambert", "lancaster", "landry", "lane", "lang", "langley", "lara",
    "larsen", "larson", "lawrence", "lawson", "le", "leach", "leblanc", "lee", "leon",
    "leonard", "lester", "levine", "levy", "lewis", "li", "lindsay", "lindsey", "little",
    "livingston", "lloyd", "logan", "long", "lopez", "lott", "love", "lowe", "lowery", "lucas",
    "luna", "lynch", "lynn", "lyons", "macdonald", "macias", "mack", "madden", "maddox",
    "maldonado", "malone", "mann", "manning", "marks", "marquez", "marsh", "marshall", "martin",
    "martinez", "mason", "massey", "mathews", "mathis", "matthews", "maxwell", "may", "mayer",
    "maynard", "mayo", "mays", "mcbride", "mccall", "mccarthy", "mccarty", "mcclain",
    "mcclure", "mcconnell", "mccormick", "mccoy", "mccray", "mcdaniel", "mcdonald", "mcdowell",
    "mcfadden", "mcfarland", "mcgee", "mcgowan", "mcguire", "mcintosh", "mcintyre", "mckay",
    "mckee", "mckenzie", "mckinney", "mcknight", "mclaughlin", "mclean", "mcmahon", "mcmillan",
    "mcneil", "mcpherson", "meadows", "medina", "mejia", "melendez", "melton", "mendez",
    "mendoza", "mercado", "mercer", "merrill", "merritt", "meyer", "meyers", "michael",
    "middleton", "miles", "miller", "mills", "miranda", "mitchell", "molina", "monroe",
    "montgomery", "montoya", "moody", "moon", "mooney", "moore", "morales", "moran", "moreno",
    "morgan", "morin", "morris", "morrison", "morrow", "morse", "morton", "moses", "mosley",
    "moss", "mullen", "mullins", "munoz", "murphy", "murray", "myers", "nash", "navarro",
    "neal", "nelson", "newman", "newton", "nguyen", "nichols", "nicholson", "nielsen", "nixon",
    "noble", "noel", "nolan", "norman", "norris", "norton", "nunez", "obrien", "ochoa",
    "oconnor", "odom", "odonnell", "oliver", "olsen", "olson", "oneal", "oneill", "orr",
    "ortega", "ortiz", "osborn", "osborne", "owen", "owens", "pace", "pacheco", "padilla",
    "page", "palmer", "park", "parker", "parks", "parrish", "parsons", "patel", "patrick",
    "patterson", "patton", "paul", "payne", "pearson", "peck", "pena", "pennington", "perez",
    "perkins", "perry", "peters", "petersen", "peterson", "petty", "phelps", "phillips",
    "pickett", "pierce", "pittman", "pitts", "pollard", "poole", "pope", "porter", "potter",
    "potts", "powell", "powers", "pratt", "preston", "price", "prince", "pruitt", "puckett",
    "pugh", "quinn",
];

pub const STREET_NAMES: &[&str] = &[
    "maple", "oak", "elm", "cedar", "pine", "walnut", "chestnut", "willow", "birch", "spruce",
    "sycamore", "magnolia", "juniper", "laurel", "hawthorn", "poplar", "hickory", "dogwood",
    "aspen", "cypress", "redwood", "alder", "beech", "cottonwood", "mulberry", "cherry",
    "main", "park", "lake", "river", "hill", "valley", "forest", "meadow", "prairie", "sunset",
    "sunrise", "highland", "ridge", "summit", "canyon", "brook", "creek", "spring", "garden",
    "orchard", "vineyard", "harbor", "bay", "ocean", "beach", "island", "bridge", "mill",
    "church", "school", "college", "union", "liberty", "victory", "heritage", "pioneer",
    "frontier", "prospect", "commerce", "market", "center", "central", "broad", "grand",
    "division", "jackson", "franklin", "washington", "jefferson", "lincoln", "madison",
    "monroe", "adams", "grant", "harrison", "cleveland",
];

pub const STREET_TYPES: &[&str] = &["st", "ave", "rd", "dr", "ln", "way", "ct", "blvd"];

pub const CITIES: &[&str] = &[
    "springfield", "franklin", "clinton", "georgetown", "salem", "fairview", "madison",
    "washington", "arlington", "ashland", "burlington", "clayton", "dayton", "dover",
    "fairfield", "florence", "greenville", "hamilton", "hudson", "jackson", "kingston",
    "lancaster", "lebanon", "lexington", "manchester", "marion", "milford", "milton",
    "newport", "norwalk", "oakland", "oxford", "plymouth", "portland", "richmond", "riverside",
    "rochester", "salisbury", "shelton", "somerset", "trenton", "troy", "vernon", "warren",
    "waterloo", "wilmington", "winchester", "windsor", "woodstock", "york", "auburn", "bedford",
    "bristol", "camden", "canton", "carlisle", "chester", "columbia", "concord", "danbury",
];

pub const STATES: &[&str] = &[
    "al", "ak", "az", "ar", "ca", "co", "ct", "de", "fl", "ga", "hi", "id", "il", "in", "ia",
    "ks", "ky", "la", "me", "md", "ma", "mi", "mn", "ms", "mo", "mt", "ne", "nv", "nh", "nj",
    "nm", "ny", "nc", "nd", "oh", "ok", "or", "pa", "ri", "sc", "sd", "tn", "tx", "ut", "vt",
    "va", "wa", "wv", "wi", "wy",
];

pub const SOURCE_SYSTEMS: &[&str] = &["crm", "billing", "support", "web", "legacy"];
