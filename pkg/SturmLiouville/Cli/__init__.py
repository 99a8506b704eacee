from SturmLiouville.Cli.Expression import parse_polynomial, parse_rational, tokenize
from SturmLiouville.Cli.Report import SCHEMA_VERSION, dumps, rational
from SturmLiouville.Cli.SelfTest import SelfTest, SelfTestResult, CriterionResult
from SturmLiouville.Cli.Commands import OperatorSpec, cmd_classify, cmd_weight, cmd_polys, cmd_gram, cmd_highorder, \
    cmd_selftest, EXIT_OK, EXIT_ERROR, EXIT_INADMISSIBLE
