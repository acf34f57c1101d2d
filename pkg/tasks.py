#  Copyright 2026 toeplitz-norm contributors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

from invoke import task


@task
def precheck(ctx):
    ctx.run("black .")
    ctx.run("pre-commit run -a")
    ctx.run("interrogate -c pyproject.toml", pty=True)


@task(help=dict(slow="also run the acceptance-scale Monte Carlo tests"))
def test(ctx, slow=False):
    ctx.run("pytest -m 'slow or not slow'" if slow else "pytest", pty=True)
