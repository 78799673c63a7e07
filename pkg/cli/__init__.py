from cli.app import app
