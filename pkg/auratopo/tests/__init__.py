from .pointset_test import TestPointSet
from .space_test import TestTopology
from .aura_test import TestAura
from .classes_test import TestClasses
from .morphism_test import TestMorphism
from .separation_test import TestSeparation
from .rough_test import TestRough
from .spread_test import TestSpread
from .sensor_test import TestSensor
from .fixtures_test import TestFixtures
from .generator_test import TestGenerator
from .document_test import TestDocument
from .properties_test import TestProperties
from .cli_test import TestCli
from .general_test import TestGeneral
